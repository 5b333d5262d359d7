#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace simspec {

// Portable seeded stream: mt19937_64 output is fixed by the standard, and the
// uniform/normal transforms below avoid the implementation-defined std
// distributions so that samples are bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1].
  double uniform_open_low() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  // Box-Muller, cosine branch only: exactly two engine draws per variate.
  double normal() {
    const double u1 = uniform_open_low();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace simspec
