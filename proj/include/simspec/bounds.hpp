#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simspec/analytic.hpp"
#include "simspec/errors.hpp"
#include "simspec/kernel.hpp"
#include "simspec/mixture.hpp"
#include "simspec/quadrature.hpp"
#include "simspec/spectra.hpp"

namespace simspec {

/// P = pi1 N(mu1, sigma1^2) + pi2 N(mu2, sigma2^2) with kernel exp(-(x - z)^2 / h).
struct TwoComponentMixture {
  double pi1 = 1.0;
  double pi2 = 0.0;
  double mu1 = 0.0;
  double sigma1 = 1.0;
  double mu2 = 0.0;
  double sigma2 = 1.0;
  Bandwidth bandwidth = Bandwidth::operator_form(1.0);

  void validate() const {
    if (!(pi1 >= 0.0) || !(pi2 >= 0.0) || std::abs(pi1 + pi2 - 1.0) > 1e-12)
      throw InputError("TwoComponentMixture: weights must be nonnegative and sum to 1");
    if (!(pi1 > pi2)) throw InputError("TwoComponentMixture: requires pi1 > pi2");
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) throw InputError("TwoComponentMixture: sigmas must be > 0");
    if (!std::isfinite(mu1) || !std::isfinite(mu2)) throw InputError("TwoComponentMixture: means must be finite");
  }

  double h() const { return bandwidth.length_sq(); }
  double omega_op() const { return bandwidth.operator_omega(); }

  MixtureModel model() const {
    return MixtureModel({GaussianComponent{{mu1}, {sigma1}}, GaussianComponent{{mu2}, {sigma2}}}, {pi1, pi2});
  }

  KernelConfig kernel() const { return KernelConfig{.omega = bandwidth.matrix_omega()}; }

  /// Requires two univariate components and a standard kernel; the heavier
  /// component becomes component 1.
  static TwoComponentMixture from(const MixtureModel& model, const KernelConfig& config) {
    if (model.size() != 2 || model.dimension() != 1)
      throw UnsupportedError("bounds: need a mixture of exactly two univariate components");
    if (config.variant != KernelVariant::standard)
      throw UnsupportedError("bounds: only the standard Gaussian kernel is supported");
    const auto& c = model.components();
    const auto& w = model.weights();
    const std::size_t a = w[0] >= w[1] ? 0 : 1;
    const std::size_t b = 1 - a;
    TwoComponentMixture mix{w[a], w[b], c[a].mu[0], c[a].sigma[0], c[b].mu[0], c[b].sigma[0], config.bandwidth()};
    mix.validate();
    return mix;
  }
};

namespace detail {

/// int int K(x, z)^2 dN(mu_a, s_a^2)(x) dN(mu_b, s_b^2)(z).
inline double kernel_sq_overlap(double h, double mu_a, double s_a, double mu_b, double s_b) {
  const double denom = h + 4.0 * (s_a * s_a + s_b * s_b);
  const double gap = mu_a - mu_b;
  return std::sqrt(h / denom) * std::exp(-2.0 * gap * gap / denom);
}

inline double normal_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

// s = sqrt(1 + 2 beta) for component 1.
inline double s1(const TwoComponentMixture& m) {
  const double beta = 2.0 * m.sigma1 * m.sigma1 / (m.omega_op() * m.omega_op());
  return std::sqrt(1.0 + 2.0 * beta);
}

// Completing the square for exp(-2 B2 (x - mu1)^2 - B5 (x - mu2)^2) = exp(-u (x - v)^2 - u w).
struct PhiZeroSquare {
  double u, v, w;
};

inline PhiZeroSquare phi0_square(const TwoComponentMixture& m) {
  const double s = s1(m);
  const double b2 = (s - 1.0) / (4.0 * m.sigma1 * m.sigma1);
  const double b5 = 1.0 / (2.0 * m.sigma2 * m.sigma2);
  const double u = 2.0 * b2 + b5;
  const double v = (2.0 * b2 * m.mu1 + b5 * m.mu2) / u;
  const double w = (2.0 * b2 * m.mu1 * m.mu1 + b5 * m.mu2 * m.mu2) / u - v * v;
  return {u, v, std::max(w, 0.0)};
}

}  // namespace detail

/// (pi1 pi2 int int K^2 dP1 dP2)^{1/2}.
inline double compute_r(const TwoComponentMixture& m) {
  m.validate();
  return std::sqrt(m.pi1 * m.pi2 * detail::kernel_sq_overlap(m.h(), m.mu1, m.sigma1, m.mu2, m.sigma2));
}

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double midpoint() const { return 0.5 * (lower + upper); }
  bool contains(double x, double tol = 0.0) const { return x >= lower - tol && x <= upper + tol; }
};

inline double gamma_eigenvalue(const TwoComponentMixture& m, int i) {
  return analytic_eigenvalue(i, m.sigma1, m.omega_op());
}
inline double nu_eigenvalue(const TwoComponentMixture& m, int i) {
  return analytic_eigenvalue(i, m.sigma2, m.omega_op());
}

/// [max(pi1 gamma0, pi2 nu0), max(pi1 gamma0, pi2 nu0) + r] brackets lambda0(K_P).
inline Interval top_eigenvalue_sandwich(const TwoComponentMixture& m) {
  const double lower = std::max(m.pi1 * gamma_eigenvalue(m, 0), m.pi2 * nu_eigenvalue(m, 0));
  return {lower, lower + compute_r(m)};
}

/// ||K||_{L2(P2 x P)}; requires pi2 > 0.
inline double norm_K_P2xP(const TwoComponentMixture& m) {
  m.validate();
  if (!(m.pi2 > 0.0)) throw InputError("norm_K_P2xP: requires pi2 > 0");
  const double cross = detail::kernel_sq_overlap(m.h(), m.mu1, m.sigma1, m.mu2, m.sigma2);
  const double within = detail::kernel_sq_overlap(m.h(), m.mu2, m.sigma2, m.mu2, m.sigma2);
  return std::sqrt(m.pi1 * cross + m.pi2 * within);
}

/// ||K||_{L2(P1 x P1)}.
inline double norm_K_P1xP1(const TwoComponentMixture& m) {
  return std::sqrt(detail::kernel_sq_overlap(m.h(), m.mu1, m.sigma1, m.mu1, m.sigma1));
}

/// ||phi_1^1||_{P2}: first non-constant eigenfunction of component 1 measured under component 2.
inline double norm_phi11_P2(const TwoComponentMixture& m) {
  m.validate();
  const double s = detail::s1(m);
  const double a0 = std::sqrt(s) / (2.0 * std::sqrt(2.0 * std::numbers::pi) * m.sigma2);
  const double a1 = (s - 1.0) / (2.0 * m.sigma1 * m.sigma1);
  const double a2 = std::pow(s * s / 4.0, 0.25);
  const double a3 = 1.0 / (2.0 * m.sigma2 * m.sigma2);
  const double a = a1 + a3;
  const double b = (m.mu1 * a1 + m.mu2 * a3) / a;
  const double c = std::max((a1 * m.mu1 * m.mu1 + a3 * m.mu2 * m.mu2) / a - b * b, 0.0);
  const double rr = a * m.sigma1 * m.sigma1 / (a2 * a2);
  const double xt = a2 * (b - m.mu1) / m.sigma1;
  if (!(rr > 0.0) || !(a > 0.0)) throw NumericError("norm_phi11_P2: R or a not positive");
  // H_1(y)^2 = 4 y^2
  const double gauss = 4.0 * std::sqrt(std::numbers::pi) * (2.0 * rr * xt * xt + 1.0) / (2.0 * std::pow(rr, 1.5));
  return std::sqrt(a0 * (m.sigma1 / a2) * std::exp(-a * c) * gauss);
}

/// ||phi_0^1||_{P2}.
inline double norm_phi01_P2(const TwoComponentMixture& m) {
  m.validate();
  const double b4 = std::pow(detail::s1(m), 0.25);
  const auto [u, v, w] = detail::phi0_square(m);
  const double value = b4 * b4 / (std::sqrt(2.0 * std::numbers::pi) * m.sigma2) * std::exp(-u * w) *
                       std::sqrt(std::numbers::pi / u);
  return std::sqrt(value);
}

/// lambda0 pi2 int phi_1^1 phi_0^1 dP2.
inline double cross_term(const TwoComponentMixture& m, double lambda0) {
  m.validate();
  const double s = detail::s1(m);
  const double b1 = lambda0 * m.pi2 / (std::sqrt(2.0 * std::numbers::pi) * m.sigma2) * std::pow(s, 0.25) / std::sqrt(2.0);
  const double b3 = std::pow(s * s / 4.0, 0.25);
  const double b4 = std::pow(s, 0.25);
  const auto [d, e, f] = detail::phi0_square(m);
  const double ss = d * m.sigma1 * m.sigma1 / (b3 * b3);
  const double xh = b3 * (e - m.mu1) / m.sigma1;
  // H_1(y) = 2 y
  return b1 * b4 * (m.sigma1 / b3) * std::exp(-d * f) * 2.0 * xh * std::sqrt(std::numbers::pi / ss);
}

/// ||g||_P = sqrt(pi1 ||g||^2_{P1} + pi2 ||g||^2_{P2}) with ||phi_k^1||_{P1} = 1.
inline double norm_phi11_P(const TwoComponentMixture& m) {
  const double p2 = norm_phi11_P2(m);
  return std::sqrt(m.pi1 + m.pi2 * p2 * p2);
}
inline double norm_phi01_P(const TwoComponentMixture& m) {
  const double p2 = norm_phi01_P2(m);
  return std::sqrt(m.pi1 + m.pi2 * p2 * p2);
}

/// pi2 ||K||_{P2 x P} ||phi_0^1||_{P2}, an upper bound on epsilon.
inline double bound_epsilon(const TwoComponentMixture& m) {
  m.validate();
  if (m.pi2 == 0.0) return 0.0;
  return m.pi2 * norm_K_P2xP(m) * norm_phi01_P2(m);
}

/// eps / (t - eps): bound on ||phi_0^1 - phi_0||_P.
inline double delta_norm_bound(double eps, double t) {
  if (!(t > eps)) throw NumericError("gap hypothesis violated: t must exceed eps");
  return eps / (t - eps);
}

struct FBound {
  double A = 0.0;
  double Delta = 0.0;
};

/// A bounds ||F||^2_{P1}; Delta bounds the part of F not explained by delta.
inline FBound bound_F(const TwoComponentMixture& m, double eps, double t) {
  const double dn = delta_norm_bound(eps, t);
  const double delta = (1.0 / m.pi1 - 1.0) * norm_phi01_P(m) + std::sqrt(m.pi2) / m.pi1 * norm_phi01_P2(m);
  return {dn * dn + 2.0 * dn * delta + delta * delta, delta};
}

/// Bound on |e|, with e the component-1 correction term of the lower bound.
inline double bound_e(const TwoComponentMixture& m, double eps, double t) {
  const double dn = delta_norm_bound(eps, t);
  return dn * norm_phi11_P(m) + std::abs(cross_term(m, 1.0));
}

// ---------------------------------------------------------------------------
// Quadrature oracle
// ---------------------------------------------------------------------------

enum class OracleQuantity {
  r_sq,
  norm_K_P2xP_sq,
  norm_phi11_P2_sq,
  norm_phi01_P2_sq,
  norm_phi01_P1_sq,
  cross_term,
  eps_sq,
  e,
  norm_phi11_P_sq,
  norm_phi01_P_sq,
};

inline constexpr std::pair<OracleQuantity, std::string_view> kOracleIds[] = {
    {OracleQuantity::r_sq, "r_sq"},
    {OracleQuantity::norm_K_P2xP_sq, "norm_K_P2xP_sq"},
    {OracleQuantity::norm_phi11_P2_sq, "norm_phi11_P2_sq"},
    {OracleQuantity::norm_phi01_P2_sq, "norm_phi01_P2_sq"},
    {OracleQuantity::norm_phi01_P1_sq, "norm_phi01_P1_sq"},
    {OracleQuantity::cross_term, "cross_term"},
    {OracleQuantity::eps_sq, "eps_sq"},
    {OracleQuantity::e, "e"},
    {OracleQuantity::norm_phi11_P_sq, "norm_phi11_P_sq"},
    {OracleQuantity::norm_phi01_P_sq, "norm_phi01_P_sq"},
};

inline std::string_view to_string(OracleQuantity q) {
  for (const auto& [k, name] : kOracleIds)
    if (k == q) return name;
  return "?";
}

inline OracleQuantity parse_oracle_quantity(std::string_view id) {
  for (const auto& [k, name] : kOracleIds)
    if (name == id) return k;
  throw InputError("quadrature_oracle: unknown quantity '" + std::string(id) + "'");
}

namespace detail {

// Panels of width min(sigma) over the hull of both mu +- 10 sigma boxes.
inline std::vector<double> oracle_breaks(const TwoComponentMixture& m) {
  const double span = 10.0;
  const double lo = std::min(m.mu1 - span * m.sigma1, m.mu2 - span * m.sigma2);
  const double hi = std::max(m.mu1 + span * m.sigma1, m.mu2 + span * m.sigma2);
  const double step = std::min(m.sigma1, m.sigma2);
  const auto panels = static_cast<int>(std::clamp(std::ceil((hi - lo) / step), 1.0, 400.0));
  std::vector<double> b;
  for (int k = 0; k <= panels; ++k) b.push_back(lo + (hi - lo) * k / panels);
  return b;
}

}  // namespace detail

/// Defining integral of `q` by adaptive Gauss-Kronrod quadrature. `lambda0`
/// scales the cross term (default 1).
inline double quadrature_oracle(OracleQuantity q, const TwoComponentMixture& m, std::optional<double> lambda0 = {}) {
  m.validate();
  const auto breaks = detail::oracle_breaks(m);
  const double h = m.h();
  auto kernel = [h](double x, double z) { return std::exp(-(x - z) * (x - z) / h); };
  auto p1 = [&](double x) { return detail::normal_pdf(x, m.mu1, m.sigma1); };
  auto p2 = [&](double x) { return detail::normal_pdf(x, m.mu2, m.sigma2); };
  auto p = [&](double x) { return m.pi1 * p1(x) + m.pi2 * p2(x); };
  const auto phi0 = analytic_eigenfunction(0, m.mu1, m.sigma1, m.omega_op());
  const auto phi1 = analytic_eigenfunction(1, m.mu1, m.sigma1, m.omega_op());

  switch (q) {
    case OracleQuantity::r_sq:
      if (m.pi2 == 0.0) return 0.0;
      return m.pi1 * m.pi2 *
             quad::integrate_2d([&](double x, double z) { return kernel(x, z) * kernel(x, z) * p1(x) * p2(z); },
                                breaks, breaks);
    case OracleQuantity::norm_K_P2xP_sq:
      return quad::integrate_2d([&](double x, double z) { return kernel(x, z) * kernel(x, z) * p2(x) * p(z); },
                                breaks, breaks);
    case OracleQuantity::norm_phi11_P2_sq:
      return quad::integrate([&](double x) { return phi1(x) * phi1(x) * p2(x); }, breaks);
    case OracleQuantity::norm_phi01_P2_sq:
      return quad::integrate([&](double x) { return phi0(x) * phi0(x) * p2(x); }, breaks);
    case OracleQuantity::norm_phi01_P1_sq:
      return quad::integrate([&](double x) { return phi0(x) * phi0(x) * p1(x); }, breaks);
    case OracleQuantity::cross_term:
      return lambda0.value_or(1.0) * m.pi2 * quad::integrate([&](double x) { return phi1(x) * phi0(x) * p2(x); }, breaks);
    case OracleQuantity::eps_sq: {
      if (m.pi2 == 0.0) return 0.0;
      return quad::integrate(
          [&](double x) {
            const double g = m.pi2 * quad::integrate([&](double y) { return kernel(x, y) * phi0(y) * p2(y); }, breaks);
            return g * g * p(x);
          },
          breaks);
    }
    case OracleQuantity::e: {
      // phi_0 of K_P from the Nystrom discretisation, extended off-grid.
      const NystromOperator op(m.model(), m.kernel());
      const double full = quad::integrate([&](double x) { return phi1(x) * (phi0(x) - op.eigenfunction(0, x)) * p(x); }, breaks);
      const double comp2 = m.pi2 * quad::integrate([&](double x) { return phi1(x) * phi0(x) * p2(x); }, breaks);
      return full - comp2;
    }
    case OracleQuantity::norm_phi11_P_sq:
      return quad::integrate([&](double x) { return phi1(x) * phi1(x) * p(x); }, breaks);
    case OracleQuantity::norm_phi01_P_sq:
      return quad::integrate([&](double x) { return phi0(x) * phi0(x) * p(x); }, breaks);
  }
  throw InputError("quadrature_oracle: unknown quantity");
}

inline double quadrature_oracle(std::string_view id, const TwoComponentMixture& m, std::optional<double> lambda0 = {}) {
  return quadrature_oracle(parse_oracle_quantity(id), m, lambda0);
}

// ---------------------------------------------------------------------------
// Second-eigenvalue interval
// ---------------------------------------------------------------------------

struct BoundOptions {
  std::optional<double> t_override;
  bool with_oracle = false;
};

struct BoundReport {
  double pi1 = 0.0, pi2 = 0.0;
  double r = 0.0;
  double gamma0 = 0.0, gamma1 = 0.0, nu0 = 0.0, nu1 = 0.0;
  Interval lambda0_sandwich;
  double lambda0 = 0.0;  // sandwich midpoint
  double t = 0.0;
  bool t_overridden = false;
  double eps = 0.0;
  double delta_norm = 0.0;
  bool delta_norm_fallback = false;
  double A = 0.0, Delta = 0.0, F = 0.0;
  double e_abs = 0.0;
  double norm_K_P2xP = 0.0, norm_K_P1xP1 = 0.0;
  double norm_phi11_P2 = 0.0, norm_phi01_P2 = 0.0;
  double norm_phi11_P = 0.0, norm_phi01_P = 0.0;
  double cross_term = 0.0;
  double lower_numerator = 0.0, D1 = 0.0, D2 = 0.0;
  Interval lambda1_interval;
  double upper_statement_form = 0.0;
  bool certified = false;
  std::vector<std::string> reasons;
  std::map<std::string, double> oracle_values;
  std::map<std::string, double> oracle_residuals;
};

/// Computable interval for lambda1(K_P). Hypothesis failures leave the report
/// uncertified with reasons; the interval is still filled in, using the trivial
/// bound ||phi_0^1 - phi_0||_P <= ||phi_0^1||_P + 1 when t <= eps.
inline BoundReport second_eigenvalue_interval(const TwoComponentMixture& m, const BoundOptions& opt = {}) {
  m.validate();
  BoundReport b;
  b.pi1 = m.pi1;
  b.pi2 = m.pi2;
  b.r = compute_r(m);
  b.gamma0 = gamma_eigenvalue(m, 0);
  b.gamma1 = gamma_eigenvalue(m, 1);
  b.nu0 = nu_eigenvalue(m, 0);
  b.nu1 = nu_eigenvalue(m, 1);
  b.lambda0_sandwich = top_eigenvalue_sandwich(m);
  b.lambda0 = b.lambda0_sandwich.midpoint();
  b.t_overridden = opt.t_override.has_value();
  b.t = opt.t_override.value_or(b.lambda0_sandwich.lower - (std::max(m.pi1 * b.gamma1, m.pi2 * b.nu0) + b.r));

  b.norm_K_P2xP = m.pi2 > 0.0 ? norm_K_P2xP(m) : 0.0;
  b.norm_K_P1xP1 = norm_K_P1xP1(m);
  b.norm_phi11_P2 = norm_phi11_P2(m);
  b.norm_phi01_P2 = norm_phi01_P2(m);
  b.norm_phi11_P = norm_phi11_P(m);
  b.norm_phi01_P = norm_phi01_P(m);
  b.cross_term = cross_term(m, b.lambda0);
  b.eps = bound_epsilon(m);

  if (m.pi1 * b.gamma0 <= m.pi2 * b.nu0) b.reasons.push_back("component 2 carries the top eigenvalue");
  if (!(b.r < b.t)) b.reasons.push_back("r < t violated");
  if (!(b.eps + b.r < b.t)) b.reasons.push_back("eps + r < t violated");
  b.certified = b.reasons.empty();

  const double trivial = b.norm_phi01_P + 1.0;
  if (b.t > b.eps) {
    b.delta_norm = std::min(delta_norm_bound(b.eps, b.t), trivial);
    b.delta_norm_fallback = b.delta_norm == trivial;
  } else {
    b.delta_norm = trivial;
    b.delta_norm_fallback = true;
  }
  const double dn = b.delta_norm;
  b.Delta = (1.0 / m.pi1 - 1.0) * b.norm_phi01_P + std::sqrt(m.pi2) / m.pi1 * b.norm_phi01_P2;
  b.A = dn * dn + 2.0 * dn * b.Delta + b.Delta * b.Delta;
  b.F = std::sqrt(b.A);
  b.e_abs = dn * b.norm_phi11_P + std::abs(cross_term(m, 1.0));

  const double p1sq = m.pi1 * m.pi1;
  const double lead = 1.0 / std::sqrt(m.pi1) + b.F;
  const double upper = p1sq * b.gamma1 * lead * lead + 2.0 * p1sq * b.norm_K_P1xP1 * lead * b.F +
                       p1sq * b.norm_K_P1xP1 * b.A + m.pi2 * b.nu0 + b.r;
  b.upper_statement_form = p1sq * b.gamma1 * (1.0 / m.pi1 + 2.0 * b.A / std::sqrt(m.pi1) + b.A) +
                           2.0 * p1sq * b.norm_K_P1xP1 * (1.0 / std::sqrt(m.pi1) + b.A) * b.A +
                           p1sq * b.norm_K_P1xP1 * b.A * b.A + b.r;

  const double e = b.e_abs;
  const double phi11_p2_sq = b.norm_phi11_P2 * b.norm_phi11_P2;
  b.lower_numerator = p1sq * b.gamma1 + b.gamma1 * m.pi1 * m.pi2 * phi11_p2_sq -
                      m.pi2 * b.norm_phi11_P * b.norm_phi11_P2 * b.norm_K_P2xP -
                      2.0 * e * (b.lambda0 * dn * b.norm_phi11_P + std::abs(b.cross_term)) - e * e * b.lambda0;
  b.D1 = m.pi1 + 2.0 * e * m.pi1 * dn + e * e + 2.0 * e * e * m.pi1 * dn + e * e * m.pi1 * dn * dn;
  b.D2 = m.pi2 * phi11_p2_sq + 2.0 * e * m.pi2 * dn * b.norm_phi11_P2 +
         e * e * m.pi2 * b.norm_phi01_P2 * b.norm_phi01_P2 + 2.0 * e * e * m.pi2 * dn * b.norm_phi01_P2 +
         e * e * m.pi2 * dn * dn;
  const double lower = b.lower_numerator > 0.0 ? b.lower_numerator / (b.D1 + b.D2) : 0.0;
  b.lambda1_interval = {std::min(lower, upper), upper};

  if (opt.with_oracle) {
    auto record = [&](OracleQuantity q, double closed, std::optional<double> aux = {}) {
      const double v = quadrature_oracle(q, m, aux);
      b.oracle_values[std::string(to_string(q))] = v;
      b.oracle_residuals[std::string(to_string(q))] = std::abs(closed - v);
    };
    record(OracleQuantity::r_sq, b.r * b.r);
    if (m.pi2 > 0.0) record(OracleQuantity::norm_K_P2xP_sq, b.norm_K_P2xP * b.norm_K_P2xP);
    record(OracleQuantity::norm_phi11_P2_sq, phi11_p2_sq);
    record(OracleQuantity::norm_phi01_P2_sq, b.norm_phi01_P2 * b.norm_phi01_P2);
    record(OracleQuantity::norm_phi01_P1_sq, 1.0);
    record(OracleQuantity::cross_term, b.cross_term, b.lambda0);
    record(OracleQuantity::norm_phi11_P_sq, b.norm_phi11_P * b.norm_phi11_P);
    record(OracleQuantity::norm_phi01_P_sq, b.norm_phi01_P * b.norm_phi01_P);
    // Bounded rather than computed quantities: record the oracle value only.
    b.oracle_values["eps_sq"] = quadrature_oracle(OracleQuantity::eps_sq, m);
    b.oracle_values["e"] = quadrature_oracle(OracleQuantity::e, m);
  }
  return b;
}

inline BoundReport second_eigenvalue_interval(const MixtureModel& model, const KernelConfig& config,
                                              const BoundOptions& opt = {}) {
  return second_eigenvalue_interval(TwoComponentMixture::from(model, config), opt);
}

}  // namespace simspec
