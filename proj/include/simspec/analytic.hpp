#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "simspec/errors.hpp"

namespace simspec {

inline constexpr int kMaxHermiteIndex = 60;

namespace detail {
inline void check_index(int i, const char* who) {
  if (i < 0 || i > kMaxHermiteIndex)
    throw InputError(std::string(who) + ": index must be in [0, 60], got " + std::to_string(i));
}
}  // namespace detail

/// Probabilists' Hermite polynomial He_i(x).
inline double hermite(int i, double x) {
  detail::check_index(i, "hermite");
  double prev = 1.0;
  if (i == 0) return prev;
  double cur = x;
  for (int k = 1; k < i; ++k) {
    const double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Physicists' Hermite polynomial H_i(x) = 2^{i/2} He_i(sqrt(2) x).
inline double hermite_physicists(int i, double x) {
  detail::check_index(i, "hermite_physicists");
  double prev = 1.0;
  if (i == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < i; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// H_i(x) / sqrt(2^i i!), by the normalised recurrence (no overflow for large i).
inline double hermite_physicists_normalised(int i, double x) {
  detail::check_index(i, "hermite_physicists_normalised");
  double prev = 1.0;
  if (i == 0) return prev;
  double cur = std::sqrt(2.0) * x;
  for (int k = 1; k < i; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// beta / (1 + beta + sqrt(1 + 2 beta)): ratio of consecutive eigenvalues.
inline double decay_ratio(double beta) {
  if (!(beta > 0.0)) throw InputError("decay_ratio: beta must be > 0");
  return beta / (1.0 + beta + std::sqrt(1.0 + 2.0 * beta));
}

/// Eigenvalue lambda_i of the operator with kernel exp(-(x - z)^2 / (2 omega^2))
/// under N(mu, sigma^2), with beta = 2 sigma^2 / omega^2.
inline double analytic_eigenvalue(int i, double sigma, double omega) {
  detail::check_index(i, "analytic_eigenvalue");
  if (!(sigma > 0.0) || !(omega > 0.0)) throw InputError("analytic_eigenvalue: sigma, omega must be > 0");
  const double beta = 2.0 * sigma * sigma / (omega * omega);
  const double denom = 1.0 + beta + std::sqrt(1.0 + 2.0 * beta);
  if (i <= 20) return std::sqrt(2.0 / denom) * std::pow(beta / denom, i);
  return std::exp(0.5 * std::log(2.0 / denom) + i * std::log(beta / denom));
}

struct AnalyticEigenpair {
  int index = 0;
  double eigenvalue = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double sigma = 1.0;
  double omega = 1.0;

  /// phi_i(x) = (1+2b)^{1/8} / sqrt(2^i i!) exp(-u^2 (s - 1) / 4) H_i(((1+2b)/4)^{1/4} u)
  /// with u = (x - mu) / sigma, s = sqrt(1 + 2b); orthonormal in L2(N(mu, sigma^2)).
  double operator()(double x) const {
    const double s = std::sqrt(1.0 + 2.0 * beta);
    const double u = (x - mu) / sigma;
    const double arg = std::pow(s * s / 4.0, 0.25) * u;
    const double envelope = std::pow(s, 0.25) * std::exp(-u * u * (s - 1.0) / 4.0);
    if (index <= 20) {
      const double norm = std::sqrt(std::ldexp(std::tgamma(index + 1.0), index));
      return envelope * hermite_physicists(index, arg) / norm;
    }
    return envelope * hermite_physicists_normalised(index, arg);
  }
};

inline AnalyticEigenpair analytic_eigenfunction(int i, double mu, double sigma, double omega) {
  const double lambda = analytic_eigenvalue(i, sigma, omega);
  return {i, lambda, 2.0 * sigma * sigma / (omega * omega), mu, sigma, omega};
}

/// One axis of an axis-aligned Gaussian: projection <mu, u_j> and spread sigma_j.
struct AxisComponent {
  double mu = 0.0;
  double sigma = 1.0;
};

struct MultiIndexEigenpair {
  std::vector<int> multi_index;
  double eigenvalue = 0.0;
  std::vector<AnalyticEigenpair> factors;

  double operator()(std::span<const double> x) const {
    if (x.size() != factors.size()) throw InputError("MultiIndexEigenpair: dimension mismatch");
    double v = 1.0;
    for (std::size_t j = 0; j < factors.size(); ++j) v *= factors[j](x[j]);
    return v;
  }
};

/// Tensor-product eigenpairs for all multi-indices with total degree <= max_total_index,
/// sorted by non-increasing eigenvalue, ties broken lexicographically by multi-index.
inline std::vector<MultiIndexEigenpair> multivariate_spectrum(const std::vector<AxisComponent>& axes,
                                                              double omega, int max_total_index) {
  if (axes.empty()) throw InputError("multivariate_spectrum: need at least one axis");
  if (max_total_index < 0 || max_total_index > kMaxHermiteIndex)
    throw InputError("multivariate_spectrum: max_total_index must be in [0, 60]");
  const std::size_t d = axes.size();
  std::vector<MultiIndexEigenpair> out;
  std::vector<int> idx(d, 0);
  // Odometer over [0, max]^d, pruned by total degree.
  while (true) {
    int total = 0;
    for (int v : idx) total += v;
    if (total <= max_total_index) {
      MultiIndexEigenpair e;
      e.multi_index = idx;
      e.eigenvalue = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        e.factors.push_back(analytic_eigenfunction(idx[j], axes[j].mu, axes[j].sigma, omega));
        e.eigenvalue *= e.factors.back().eigenvalue;
      }
      out.push_back(std::move(e));
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++idx[k] <= max_total_index) break;
      idx[k] = 0;
      if (k == 0) {
        k = d + 1;
        break;
      }
    }
    if (k == d + 1) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue > b.eigenvalue;
    return a.multi_index < b.multi_index;
  });
  return out;
}

}  // namespace simspec
