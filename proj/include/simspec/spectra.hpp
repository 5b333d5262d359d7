#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "simspec/eigen_jacobi.hpp"
#include "simspec/errors.hpp"
#include "simspec/kernel.hpp"
#include "simspec/mixture.hpp"

namespace simspec {

// ---------------------------------------------------------------------------
// delta_2 spectral distance
// ---------------------------------------------------------------------------

inline bool is_non_increasing(std::span<const double> s) {
  return std::adjacent_find(s.begin(), s.end(), std::less<>()) == s.end();
}

/// l2 distance between two eigenvalue sequences, minimised over all matchings
/// after padding with zeros. Inputs must be sorted non-increasing. Positive
/// entries are paired in sorted order; negative entries (possible for the
/// diagonal-free kernel matrix) pair with zeros when the other side is
/// nonnegative.
inline double delta2(std::span<const double> a, std::span<const double> b) {
  if (!is_non_increasing(a) || !is_non_increasing(b))
    throw InputError("delta2: sequences must be sorted non-increasing");

  auto split = [](std::span<const double> s, std::vector<double>& pos, std::vector<double>& neg) {
    for (double v : s) (v >= 0.0 ? pos : neg).push_back(v);
    std::reverse(neg.begin(), neg.end());  // most negative first
  };
  std::vector<double> pa, na, pb, nb;
  split(a, pa, na);
  split(b, pb, nb);

  auto sorted_gap = [](const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t len = std::max(x.size(), y.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const double xi = i < x.size() ? x[i] : 0.0;
      const double yi = i < y.size() ? y[i] : 0.0;
      acc += (xi - yi) * (xi - yi);
    }
    return acc;
  };
  return std::sqrt(sorted_gap(pa, pb) + sorted_gap(na, nb));
}

/// R (xi + 1) / sqrt(n): deviation bound between kernel-matrix and operator spectra.
inline double bk_bound(double r, std::size_t n, double xi) {
  if (!(r > 0.0) || !(xi > 0.0)) throw InputError("bk_bound: R and xi must be > 0");
  if (n == 0) throw InputError("bk_bound: n must be >= 1");
  return r * (xi + 1.0) / std::sqrt(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Nystrom discretisation of K_P f(x) = int K(x, z) f(z) p(z) dz
// ---------------------------------------------------------------------------

struct OperatorSpectrum {
  Eigen::VectorXd eigenvalues;  // non-increasing, full grid spectrum
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;      // trapezoid weights

  /// Leading eigenvalues above `floor`, as used for delta_2.
  std::vector<double> truncated(double floor = 1e-12) const {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < eigenvalues.size() && eigenvalues(i) > floor; ++i)
      out.push_back(eigenvalues(i));
    return out;
  }
};

inline constexpr std::size_t kMinNystromGrid = 64;

/// Discretised operator on a uniform trapezoid grid, symmetrised as
/// D^{1/2} K D^{1/2} with D = diag(p(z_j) w_j). Keeps eigenvectors so that
/// eigenfunctions can be evaluated off-grid by Nystrom extension.
class NystromOperator {
 public:
  NystromOperator(const MixtureModel& model, const KernelConfig& config,
                  std::size_t grid_points = 512, double span = 10.0)
      : config_(config) {
    if (model.dimension() != 1)
      throw UnsupportedError("nystrom: only univariate models (use analytic tensor products)");
    if (grid_points < kMinNystromGrid) throw InputError("nystrom: grid_points must be >= 64");
    if (!(span > 0.0)) throw InputError("nystrom: span must be > 0");
    if (config.variant == KernelVariant::rescaled)
      throw UnsupportedError("nystrom: the rescaled kernel depends on n and has no operator limit");
    config.validate(1);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& c : model.components()) {
      lo = std::min(lo, c.mu[0]);
      hi = std::max(hi, c.mu[0]);
    }
    lo -= span * model.max_sigma();
    hi += span * model.max_sigma();

    const auto m = static_cast<Eigen::Index>(grid_points);
    const double h = (hi - lo) / static_cast<double>(m - 1);
    nodes_.resize(m);
    weights_.resize(m);
    sqrt_mass_.resize(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      nodes_(j) = lo + h * static_cast<double>(j);
      weights_(j) = (j == 0 || j == m - 1) ? 0.5 * h : h;
      sqrt_mass_(j) = std::sqrt(density(model, nodes_(j)) * weights_(j));
    }
    Eigen::MatrixXd a(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      a(i, i) = sqrt_mass_(i) * sqrt_mass_(i);
      for (Eigen::Index j = i + 1; j < m; ++j) {
        const double v = sqrt_mass_(i) * kernel_at(nodes_(i), nodes_(j)) * sqrt_mass_(j);
        a(i, j) = v;
        a(j, i) = v;
      }
    }
    summary_ = eigendecompose(a, 1e-13);
  }

  const Eigen::VectorXd& eigenvalues() const { return summary_.eigenvalues; }
  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  /// p(z_j) w_j: the discrete measure standing in for P.
  Eigen::VectorXd mass() const { return sqrt_mass_.cwiseProduct(sqrt_mass_); }

  OperatorSpectrum spectrum() const { return {summary_.eigenvalues, nodes_, weights_}; }

  /// phi_k(x) = (1 / lambda_k) sum_j K(x, z_j) sqrt(p_j w_j) v_jk, normalised in
  /// the discrete L2(P). Sign follows the eigenvector convention.
  double eigenfunction(Eigen::Index k, double x) const {
    const double lambda = summary_.eigenvalues(k);
    if (!(lambda > 0.0)) throw NumericError("nystrom: eigenfunction of a non-positive eigenvalue");
    double acc = 0.0;
    for (Eigen::Index j = 0; j < nodes_.size(); ++j)
      acc += kernel_at(x, nodes_(j)) * sqrt_mass_(j) * summary_.eigenvectors(j, k);
    return acc / lambda;
  }

 private:
  double kernel_at(double x, double z) const {
    return raw_kernel(std::span<const double>(&x, 1), std::span<const double>(&z, 1), config_, 1);
  }

  KernelConfig config_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd sqrt_mass_;
  SpectralSummary summary_;
};

inline OperatorSpectrum nystrom_spectrum(const MixtureModel& model, const KernelConfig& config,
                                         std::size_t grid_points = 512, double span = 10.0) {
  return NystromOperator(model, config, grid_points, span).spectrum();
}

// ---------------------------------------------------------------------------
// Matrix -> operator convergence
// ---------------------------------------------------------------------------

struct ConvergenceRow {
  std::size_t n = 0;
  double median_delta2 = 0.0;
  double bk_bound = 0.0;
};

inline double median(std::vector<double> v) {
  if (v.empty()) throw InputError("median: empty input");
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

/// Seed used for repetition `rep` at sample size n.
inline std::uint64_t convergence_seed(std::uint64_t base, std::size_t n, std::size_t rep) {
  return base + 1000003ULL * n + rep;
}

/// For each n: median over `seeds` draws of delta_2(lambda(K~^n), lambda(K_P)),
/// next to the bound R (xi + 1) / sqrt(n) at xi = 1 with R = sup K(x, x) = 1.
inline std::vector<ConvergenceRow> convergence_experiment(const MixtureModel& model,
                                                          const KernelConfig& config,
                                                          const std::vector<std::size_t>& ns,
                                                          std::size_t seeds,
                                                          std::uint64_t base_seed = 0,
                                                          std::size_t grid_points = 512) {
  if (seeds < 10) throw InputError("convergence_experiment: need at least 10 seeds");
  if (ns.empty()) throw InputError("convergence_experiment: empty ns");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == 0) throw InputError("convergence_experiment: n must be >= 1");
    if (i > 0 && ns[i] <= ns[i - 1]) throw InputError("convergence_experiment: ns must increase");
  }
  const std::vector<double> operator_spectrum =
      nystrom_spectrum(model, config, grid_points).truncated(1e-12);

  std::vector<ConvergenceRow> rows;
  for (std::size_t n : ns) {
    std::vector<double> d;
    d.reserve(seeds);
    for (std::size_t rep = 0; rep < seeds; ++rep) {
      const SampleSet s = sample(model, n, convergence_seed(base_seed, n, rep));
      const Eigen::VectorXd ev = symmetric_eigenvalues(build_centered_kernel(s, config));
      d.push_back(delta2(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())),
                         operator_spectrum));
    }
    rows.push_back({n, median(std::move(d)), bk_bound(1.0, n, 1.0)});
  }
  return rows;
}

}  // namespace simspec
