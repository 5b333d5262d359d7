#pragma once

#include <stdexcept>
#include <string>

namespace simspec {

/// Malformed or out-of-contract arguments (dimension mismatch, unsorted input, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inconsistent kernel configuration (missing alphas, missing sigma_max, ...).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure: non-convergence or a formula evaluated outside its domain.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Request outside the supported model class (e.g. Nystrom on l > 1).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace simspec
