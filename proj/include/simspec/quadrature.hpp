#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "simspec/errors.hpp"

namespace simspec::quad {

inline constexpr double kRelTol = 1e-13;
inline constexpr double kAbsTol = 1e-18;
inline constexpr unsigned kMaxDepth = 12;

/// Breakpoints covering [mu - span*sigma, mu + span*sigma] in one-sigma steps.
/// Integrating piecewise keeps narrow Gaussian peaks from slipping between
/// the nodes of a single wide Kronrod panel.
inline void add_gaussian_breaks(std::vector<double>& breaks, double mu, double sigma, double span = 10.0) {
  const int steps = static_cast<int>(std::ceil(span));
  for (int k = -steps; k <= steps; ++k) breaks.push_back(mu + sigma * static_cast<double>(k) * span / steps);
}

/// Sorted, deduplicated breakpoints restricted to their hull.
inline std::vector<double> normalise_breaks(std::vector<double> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  if (breaks.size() < 2) throw InputError("quadrature: need at least two breakpoints");
  return breaks;
}

namespace detail {

// Bisects until the Kronrod error estimate is below max(rel * L1, abs).
template <class F>
double adapt(F& f, double a, double b, unsigned depth) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double err = 0.0;
  double l1 = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
  if (depth == 0 || err <= std::max(kRelTol * l1, kAbsTol)) return v;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, depth - 1) + adapt(f, mid, b, depth - 1);
}

}  // namespace detail

/// Adaptive 61-point Gauss-Kronrod on each panel between consecutive breakpoints.
template <class F>
double integrate(F&& f, const std::vector<double>& breaks) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] <= breaks[i]) continue;
    total += detail::adapt(f, breaks[i], breaks[i + 1], kMaxDepth);
  }
  return total;
}

template <class F>
double integrate(F&& f, double a, double b) {
  return integrate(std::forward<F>(f), std::vector<double>{a, b});
}

/// Iterated 1-D integration over a tensor box: int int f(x, y) dy dx.
template <class F>
double integrate_2d(F&& f, const std::vector<double>& x_breaks, const std::vector<double>& y_breaks) {
  return integrate(
      [&](double x) { return integrate([&](double y) { return f(x, y); }, y_breaks); }, x_breaks);
}

}  // namespace simspec::quad
