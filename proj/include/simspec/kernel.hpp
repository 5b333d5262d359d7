#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simspec/errors.hpp"
#include "simspec/mixture.hpp"

namespace simspec {

enum class KernelVariant { standard, weighted, rescaled };

/// How omega enters the Gaussian: `matrix` is exp(-d^2 / omega^2),
/// `operator_form` is exp(-d^2 / (2 omega^2)).
enum class Convention { matrix, operator_form };

inline std::string_view to_string(KernelVariant v) {
  switch (v) {
    case KernelVariant::standard: return "standard";
    case KernelVariant::weighted: return "weighted";
    case KernelVariant::rescaled: return "rescaled";
  }
  return "standard";
}

inline KernelVariant parse_variant(std::string_view s) {
  if (s == "standard") return KernelVariant::standard;
  if (s == "weighted") return KernelVariant::weighted;
  if (s == "rescaled") return KernelVariant::rescaled;
  throw ConfigError("unknown kernel variant '" + std::string(s) + "'");
}

inline std::string_view to_string(Convention c) {
  return c == Convention::matrix ? "matrix" : "operator";
}

inline Convention parse_convention(std::string_view s) {
  if (s == "matrix") return Convention::matrix;
  if (s == "operator") return Convention::operator_form;
  throw ConfigError("unknown kernel convention '" + std::string(s) + "'");
}

/// Gaussian bandwidth with an explicit convention. Internally everything is
/// expressed through the squared length h in K(x, z) = exp(-(x - z)^2 / h).
class Bandwidth {
 public:
  static Bandwidth matrix(double omega) { return Bandwidth(omega * omega); }
  static Bandwidth operator_form(double omega) { return Bandwidth(2.0 * omega * omega); }
  static Bandwidth of(double omega, Convention c) {
    return c == Convention::matrix ? matrix(omega) : operator_form(omega);
  }

  double length_sq() const { return h_; }
  /// omega of the exp(-d^2 / (2 omega^2)) form used by the closed-form spectra.
  double operator_omega() const { return std::sqrt(h_ / 2.0); }
  double matrix_omega() const { return std::sqrt(h_); }

 private:
  explicit Bandwidth(double h) : h_(h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("bandwidth must be finite and > 0");
  }
  double h_;
};

struct KernelConfig {
  double omega = 1.0;
  KernelVariant variant = KernelVariant::standard;
  std::vector<double> alphas;       // weighted only, one per feature
  std::optional<double> sigma_max;  // rescaled only
  Convention convention = Convention::matrix;

  Bandwidth bandwidth() const { return Bandwidth::of(omega, convention); }
  double length_sq() const { return bandwidth().length_sq(); }

  void validate(std::size_t dim) const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw ConfigError("kernel: omega must be > 0");
    const bool weighted = variant == KernelVariant::weighted;
    const bool rescaled = variant == KernelVariant::rescaled;
    if (weighted != !alphas.empty())
      throw ConfigError("kernel: alphas must be present iff variant is weighted");
    if (weighted && alphas.size() != dim)
      throw ConfigError("kernel: need one alpha per feature (" + std::to_string(dim) + ")");
    for (double a : alphas)
      if (!(a > 0.0)) throw ConfigError("kernel: alphas must be > 0");
    if (rescaled != sigma_max.has_value())
      throw ConfigError("kernel: sigma_max must be present iff variant is rescaled");
    if (rescaled && !(*sigma_max > 0.0)) throw ConfigError("kernel: sigma_max must be > 0");
  }
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    d2 += d * d;
  }
  return d2;
}

/// K(x_i, x_j) before the 1/n factor; equals 1 on the diagonal for every variant.
inline double raw_kernel(std::span<const double> xi, std::span<const double> xj,
                         const KernelConfig& config, std::size_t n) {
  switch (config.variant) {
    case KernelVariant::standard:
      return std::exp(-squared_distance(xi, xj) / config.length_sq());
    case KernelVariant::weighted: {
      if (config.alphas.size() != xi.size()) throw ConfigError("kernel: missing or short alphas");
      double s = 0.0;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        const double d = xi[k] - xj[k];
        s += config.alphas[k] * (d * d);
      }
      return std::exp(-s);
    }
    case KernelVariant::rescaled: {
      if (!config.sigma_max) throw ConfigError("kernel: rescaled variant needs sigma_max");
      const double scale = *config.sigma_max * static_cast<double>(n) * config.length_sq();
      return std::exp(-squared_distance(xi, xj) / scale);
    }
  }
  return 0.0;
}

/// Similarity entry (1/n) K(x_i, x_j).
inline double kernel_value(std::span<const double> xi, std::span<const double> xj,
                           const KernelConfig& config, std::size_t n) {
  if (xi.size() != xj.size()) throw InputError("kernel_value: dimension mismatch");
  if (n == 0) throw InputError("kernel_value: n must be >= 1");
  return raw_kernel(xi, xj, config, n) / static_cast<double>(n);
}

struct KernelMatrix {
  Eigen::MatrixXd entries;
  KernelConfig config;
  std::size_t n = 0;
};

/// Fills each unordered pair once, so the result is exactly symmetric.
inline KernelMatrix build_kernel_matrix(const PointMatrix& points, const KernelConfig& config) {
  const auto n = points.rows();
  if (n < 1) throw InputError("build_kernel_matrix: need at least one point");
  config.validate(static_cast<std::size_t>(points.cols()));
  KernelMatrix k{Eigen::MatrixXd(n, n), config, static_cast<std::size_t>(n)};
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k.entries(i, i) = inv_n;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = kernel_value(row_span(points, i), row_span(points, j), config, k.n);
      k.entries(i, j) = v;
      k.entries(j, i) = v;
    }
  }
  return k;
}

inline KernelMatrix build_kernel_matrix(const SampleSet& samples, const KernelConfig& config) {
  return build_kernel_matrix(samples.points, config);
}

/// (1/n)(K(x_i, x_j) - delta_ij): the kernel matrix with its diagonal removed.
inline Eigen::MatrixXd build_centered_kernel(const PointMatrix& points, const KernelConfig& config) {
  Eigen::MatrixXd m = build_kernel_matrix(points, config).entries;
  m.diagonal().setZero();
  return m;
}

inline Eigen::MatrixXd build_centered_kernel(const SampleSet& samples, const KernelConfig& config) {
  return build_centered_kernel(samples.points, config);
}

struct RowSumBounds {
  double min_row_sum = 0.0;
  double max_row_sum = 0.0;
};

/// Extreme row sums; for an entrywise-positive matrix they bracket the Perron root.
inline RowSumBounds row_sum_bounds(const KernelMatrix& k) {
  const Eigen::VectorXd sums = k.entries.rowwise().sum();
  return {sums.minCoeff(), sums.maxCoeff()};
}

}  // namespace simspec
