#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "simspec/errors.hpp"

namespace simspec {

/// Eigenpairs of a symmetric matrix, eigenvalues non-increasing, column k of
/// `eigenvectors` paired with eigenvalue k. Each eigenvector has its
/// largest-magnitude entry positive (lowest index on ties).
struct SpectralSummary {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  double residual = 0.0;  // max_k ||M v_k - lambda_k v_k||_2
};

namespace detail {

inline constexpr int kMaxJacobiSweeps = 50;

inline void check_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InputError("eigendecompose: matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError("eigendecompose: matrix is not symmetric within 1e-12");
}

// Row-cyclic Jacobi on a full symmetric matrix. Rotations below `skip` are
// not applied; iteration stops after a sweep that applies none.
template <bool kVectors>
void jacobi_sweeps(Eigen::MatrixXd& a, Eigen::MatrixXd& v, double tol) {
  const Eigen::Index n = a.rows();
  const double norm = a.norm();
  if (norm == 0.0 || n < 2) return;
  const double skip = 0.1 * tol * norm / static_cast<double>(n);

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= skip) continue;
        rotated = true;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* colp = a.col(p).data();
        double* colq = a.col(q).data();
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = colp[k];
          const double akq = colq[k];
          colp[k] = c * akp - s * akq;
          colq[k] = s * akp + c * akq;
        }
        // Symmetry: rows p, q mirror the updated columns.
        for (Eigen::Index k = 0; k < n; ++k) {
          a(p, k) = colp[k];
          a(q, k) = colq[k];
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if constexpr (kVectors) {
          double* vp = v.col(p).data();
          double* vq = v.col(q).data();
          for (Eigen::Index k = 0; k < n; ++k) {
            const double x = vp[k];
            const double y = vq[k];
            vp[k] = c * x - s * y;
            vq[k] = s * x + c * y;
          }
        }
      }
    }
    if (!rotated) return;
  }
  throw NumericError("eigendecompose: Jacobi did not converge within 50 sweeps");
}

inline std::vector<Eigen::Index> descending_order(const Eigen::VectorXd& d) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(d.size()));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](auto i, auto j) { return d(i) > d(j); });
  return idx;
}

}  // namespace detail

/// Full eigendecomposition by cyclic Jacobi rotations.
/// Guarantees ||M - V diag(l) V^T||_F <= tol ||M||_F.
inline SpectralSummary eigendecompose(const Eigen::MatrixXd& m, double tol = 1e-12) {
  if (!(tol >= 1e-14)) throw InputError("eigendecompose: tol must be >= 1e-14");
  detail::check_symmetric(m);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  detail::jacobi_sweeps<true>(a, v, tol);

  const Eigen::VectorXd d = a.diagonal();
  const auto order = detail::descending_order(d);
  SpectralSummary out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = d(src);
    Eigen::VectorXd col = v.col(src);
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (std::abs(col(i)) > std::abs(col(arg))) arg = i;
    if (col(arg) < 0.0) col = -col;
    out.eigenvectors.col(k) = col;
  }
  const Eigen::MatrixXd r = m * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
  out.residual = n > 0 ? r.colwise().norm().maxCoeff() : 0.0;
  return out;
}

/// Eigenvalues only (non-increasing); skips eigenvector accumulation.
inline Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m, double tol = 1e-12) {
  if (!(tol >= 1e-14)) throw InputError("symmetric_eigenvalues: tol must be >= 1e-14");
  detail::check_symmetric(m);
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd unused;
  detail::jacobi_sweeps<false>(a, unused, tol);
  Eigen::VectorXd d = a.diagonal();
  std::sort(d.data(), d.data() + d.size(), std::greater<>());
  return d;
}

}  // namespace simspec
