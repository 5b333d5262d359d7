#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "simspec/eigen_jacobi.hpp"
#include "simspec/errors.hpp"
#include "simspec/kernel.hpp"
#include "simspec/mixture.hpp"

namespace simspec {

inline constexpr double kDefaultTau = 0.05;

/// Positions y (n x m, one point per row) moved by the map, parameters x
/// (n x l) fixed.
struct SystemState {
  Eigen::MatrixXd positions;
  PointMatrix params;
  std::size_t iteration = 0;
};

/// y <- K y, applied to each coordinate column independently.
inline SystemState step(const SystemState& state, const KernelMatrix& k) {
  const Eigen::Index n = state.positions.rows();
  if (k.entries.rows() != n || k.entries.cols() != n)
    throw InputError("step: kernel size does not match the number of points");
  if (state.params.rows() != n) throw InputError("step: params and positions differ in point count");
  SystemState next{Eigen::MatrixXd(n, state.positions.cols()), state.params, state.iteration + 1};
  for (Eigen::Index c = 0; c < state.positions.cols(); ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) acc += k.entries(i, j) * state.positions(j, c);
      next.positions(i, c) = acc;
    }
  }
  return next;
}

/// Largest pairwise Euclidean distance.
inline double diameter(const Eigen::MatrixXd& y) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < y.rows(); ++i)
    for (Eigen::Index j = i + 1; j < y.rows(); ++j) best = std::max(best, (y.row(i) - y.row(j)).squaredNorm());
  return std::sqrt(best);
}

inline Eigen::RowVectorXd centroid(const Eigen::MatrixXd& y) { return y.colwise().mean(); }

/// Single-linkage components of the graph joining points closer than
/// tau * reference (strict). reference defaults to diameter(y). Labels are
/// numbered by lowest member index.
inline std::vector<int> detect_clusters(const Eigen::MatrixXd& y, double tau,
                                        std::optional<double> reference = {}) {
  if (!(tau > 0.0)) throw InputError("detect_clusters: tau must be > 0");
  const auto n = static_cast<std::size_t>(y.rows());
  const double ref = reference.value_or(diameter(y));
  if (ref < 0.0) throw InputError("detect_clusters: reference diameter must be >= 0");
  std::vector<int> labels(n, -1);
  if (n == 0) return labels;
  if (diameter(y) == 0.0) {
    std::fill(labels.begin(), labels.end(), 0);
    return labels;
  }
  const double thr_sq = (tau * ref) * (tau * ref);
  int next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (labels[s] >= 0) continue;
    labels[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b) {
        if (labels[b] >= 0) continue;
        const auto ia = static_cast<Eigen::Index>(a);
        const auto ib = static_cast<Eigen::Index>(b);
        if ((y.row(ia) - y.row(ib)).squaredNorm() < thr_sq) {
          labels[b] = next;
          stack.push_back(b);
        }
      }
    }
    ++next;
  }
  return labels;
}

inline int cluster_count(const std::vector<int>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

/// Smallest between-cluster distance over the largest within-cluster diameter.
/// 0 with fewer than two clusters, +inf when every cluster is a single point.
inline double separation_ratio(const Eigen::MatrixXd& y, const std::vector<int>& labels) {
  if (cluster_count(labels) < 2) return 0.0;
  double between = std::numeric_limits<double>::infinity();
  double within = 0.0;
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < y.rows(); ++j) {
      const double d = (y.row(i) - y.row(j)).norm();
      if (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
        within = std::max(within, d);
      else
        between = std::min(between, d);
    }
  }
  return within == 0.0 ? std::numeric_limits<double>::infinity() : between / within;
}

/// Participation ratio (sum l)^2 / sum l^2.
inline double effective_rank(std::span<const double> eigenvalues) {
  double s = 0.0;
  double s2 = 0.0;
  for (double v : eigenvalues) {
    if (v < 0.0) throw InputError("effective_rank: eigenvalues must be nonnegative");
    s += v;
    s2 += v * v;
  }
  if (s2 == 0.0) throw InputError("effective_rank: all eigenvalues are zero");
  return s * s / s2;
}

/// Centroid-centred positions divided by the diameter (zeros when the diameter is 0).
inline Eigen::MatrixXd normalized_coordinates(const Eigen::MatrixXd& y) {
  const double d = diameter(y);
  Eigen::MatrixXd out = y.rowwise() - centroid(y);
  if (d > 0.0) out /= d;
  else out.setZero();
  return out;
}

/// n points evenly spaced on the segment [start, end].
inline Eigen::MatrixXd line_layout(std::size_t n, std::span<const double> start, std::span<const double> end) {
  if (n == 0) throw InputError("line_layout: n must be >= 1");
  if (start.size() != end.size() || start.empty()) throw InputError("line_layout: endpoint dimensions differ");
  Eigen::MatrixXd y(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(start.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    for (std::size_t c = 0; c < start.size(); ++c)
      y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = (1.0 - t) * start[c] + t * end[c];
  }
  return y;
}

/// Angle between the position columns and the span of K's top eigenvector:
/// asin(||(I - v v^T) Y||_F / ||Y||_F).
inline double dominant_subspace_angle(const Eigen::MatrixXd& y, const Eigen::VectorXd& top) {
  const double total = y.norm();
  if (total == 0.0) return 0.0;
  const Eigen::MatrixXd rest = y - top * (top.transpose() * y);
  return std::asin(std::min(1.0, rest.norm() / total));
}

struct Trajectory {
  std::vector<Eigen::MatrixXd> states;
  std::vector<double> diameters;
  std::vector<double> centroid_norms;
  std::vector<std::vector<int>> cluster_labels;
  PointMatrix params;
  double tau = kDefaultTau;

  std::size_t iterations() const { return states.empty() ? 0 : states.size() - 1; }
};

/// Builds K once from the parameters and iterates. Cluster labels use
/// tau times the initial diameter as the linkage threshold.
inline Trajectory run(const SampleSet& samples, const Eigen::MatrixXd& initial, const KernelConfig& config,
                      std::size_t iters, double tau = kDefaultTau) {
  if (initial.rows() != samples.points.rows())
    throw InputError("run: initial positions and samples differ in point count");
  const KernelMatrix k = build_kernel_matrix(samples, config);
  Trajectory t;
  t.params = samples.points;
  t.tau = tau;
  SystemState s{initial, samples.points, 0};
  const double d0 = diameter(initial);
  auto record = [&](const Eigen::MatrixXd& y) {
    t.states.push_back(y);
    t.diameters.push_back(diameter(y));
    t.centroid_norms.push_back(centroid(y).norm());
    t.cluster_labels.push_back(detect_clusters(y, tau, d0));
  };
  record(s.positions);
  for (std::size_t i = 0; i < iters; ++i) {
    s = step(s, k);
    record(s.positions);
  }
  return t;
}

/// Positions start at the parameter values.
inline Trajectory run(const SampleSet& samples, const KernelConfig& config, std::size_t iters,
                      double tau = kDefaultTau) {
  return run(samples, Eigen::MatrixXd(samples.points), config, iters, tau);
}

/// First iteration with diam_k / diam_0 < diam_ratio while
/// |centroid_k| / |centroid_0| > centroid_ratio.
inline std::optional<std::size_t> cluster_before_collapse(const Trajectory& t, double diam_ratio = 0.05,
                                                          double centroid_ratio = 0.5) {
  if (t.states.empty() || t.diameters[0] == 0.0 || t.centroid_norms[0] == 0.0) return std::nullopt;
  for (std::size_t k = 0; k < t.states.size(); ++k)
    if (t.diameters[k] / t.diameters[0] < diam_ratio && t.centroid_norms[k] / t.centroid_norms[0] > centroid_ratio)
      return k;
  return std::nullopt;
}

}  // namespace simspec
