#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simspec/errors.hpp"
#include "simspec/random.hpp"

namespace simspec {

/// n x l matrix of parameter vectors, one point per row (rows are contiguous).
using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> row_span(const PointMatrix& m, Eigen::Index i) {
  return {m.data() + i * m.cols(), static_cast<std::size_t>(m.cols())};
}

/// Axis-aligned Gaussian N(mu, diag(sigma^2)).
struct GaussianComponent {
  std::vector<double> mu;
  std::vector<double> sigma;

  std::size_t dimension() const { return mu.size(); }

  void validate() const {
    if (mu.empty()) throw InputError("GaussianComponent: dimension must be >= 1");
    if (mu.size() != sigma.size())
      throw InputError("GaussianComponent: mu and sigma lengths differ");
    for (double s : sigma)
      if (!(s > 0.0) || !std::isfinite(s))
        throw InputError("GaussianComponent: sigma entries must be finite and > 0");
    for (double m : mu)
      if (!std::isfinite(m)) throw InputError("GaussianComponent: mu entries must be finite");
  }

  double density(std::span<const double> x) const {
    double log_p = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
      const double z = (x[k] - mu[k]) / sigma[k];
      log_p += -0.5 * z * z - std::log(sigma[k]) - 0.5 * std::log(2.0 * std::numbers::pi);
    }
    return std::exp(log_p);
  }
};

/// P = sum_g pi_g P^g with Gaussian components sharing one dimension.
class MixtureModel {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  MixtureModel(std::vector<GaussianComponent> components, std::vector<double> weights)
      : components_(std::move(components)), weights_(std::move(weights)) {
    if (components_.empty()) throw InputError("MixtureModel: need at least one component");
    if (components_.size() != weights_.size())
      throw InputError("MixtureModel: one weight per component required");
    double total = 0.0;
    for (std::size_t g = 0; g < components_.size(); ++g) {
      components_[g].validate();
      if (components_[g].dimension() != components_[0].dimension())
        throw InputError("MixtureModel: components must share dimension");
      // Zero weights are tolerated so that degenerate limits (pi_2 = 0) stay expressible.
      if (!(weights_[g] >= 0.0)) throw InputError("MixtureModel: weights must be nonnegative");
      total += weights_[g];
    }
    if (std::abs(total - 1.0) > kWeightTolerance)
      throw InputError("MixtureModel: weights must sum to 1");
  }

  /// Single-component convenience constructor.
  explicit MixtureModel(GaussianComponent component)
      : MixtureModel(std::vector<GaussianComponent>{std::move(component)}, {1.0}) {}

  std::size_t dimension() const { return components_.front().dimension(); }
  std::size_t size() const { return components_.size(); }
  const std::vector<GaussianComponent>& components() const { return components_; }
  const std::vector<double>& weights() const { return weights_; }

  double max_sigma() const {
    double s = 0.0;
    for (const auto& c : components_)
      for (double v : c.sigma) s = std::max(s, v);
    return s;
  }

 private:
  std::vector<GaussianComponent> components_;
  std::vector<double> weights_;
};

/// Mixture density p(x) = sum_g pi_g N(x; mu_g, diag sigma_g^2).
inline double density(const MixtureModel& model, std::span<const double> x) {
  if (x.size() != model.dimension())
    throw InputError("density: point dimension " + std::to_string(x.size()) +
                     " does not match model dimension " + std::to_string(model.dimension()));
  double p = 0.0;
  for (std::size_t g = 0; g < model.size(); ++g)
    p += model.weights()[g] * model.components()[g].density(x);
  return p;
}

inline double density(const MixtureModel& model, double x) {
  return density(model, std::span<const double>(&x, 1));
}

struct SampleSet {
  PointMatrix points;
  std::vector<int> labels;
  std::uint64_t seed = 0;

  std::size_t size() const { return labels.size(); }
  std::size_t dimension() const { return static_cast<std::size_t>(points.cols()); }
};

/// Inverse-CDF categorical draw; the lowest index wins on ties.
inline int draw_component(const std::vector<double>& weights, double u) {
  double cumulative = 0.0;
  for (std::size_t g = 0; g < weights.size(); ++g) {
    cumulative += weights[g];
    if (u < cumulative) return static_cast<int>(g);
  }
  // u in [sum - eps, 1): fall back to the last component with positive weight.
  for (std::size_t g = weights.size(); g-- > 0;)
    if (weights[g] > 0.0) return static_cast<int>(g);
  return 0;
}

/// Draws n labelled points. Per point: one uniform for the label, then one
/// Box-Muller normal per dimension, all from a single mt19937_64(seed) stream.
inline SampleSet sample(const MixtureModel& model, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("sample: n must be >= 1");
  Rng rng(seed);
  const auto l = static_cast<Eigen::Index>(model.dimension());
  SampleSet out;
  out.seed = seed;
  out.points.resize(static_cast<Eigen::Index>(n), l);
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int g = draw_component(model.weights(), rng.uniform());
    out.labels[i] = g;
    const auto& comp = model.components()[static_cast<std::size_t>(g)];
    for (Eigen::Index k = 0; k < l; ++k)
      out.points(static_cast<Eigen::Index>(i), k) =
          comp.mu[static_cast<std::size_t>(k)] + comp.sigma[static_cast<std::size_t>(k)] * rng.normal();
  }
  return out;
}

/// Wraps given points as a SampleSet (labels unknown, set to 0).
inline SampleSet make_sample_set(PointMatrix points) {
  SampleSet s;
  s.labels.assign(static_cast<std::size_t>(points.rows()), 0);
  s.points = std::move(points);
  return s;
}

}  // namespace simspec
