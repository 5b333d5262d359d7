#pragma once

// Config parsing and CSV/JSON output.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "simspec/bounds.hpp"
#include "simspec/dynamics.hpp"
#include "simspec/errors.hpp"
#include "simspec/kernel.hpp"
#include "simspec/mixture.hpp"
#include "simspec/spectra.hpp"

namespace simspec::io {

using json = nlohmann::ordered_json;

struct LineLayout {
  std::vector<double> start;
  std::vector<double> end;
};

struct ExperimentConfig {
  MixtureModel model;
  KernelConfig kernel;
  std::size_t n = 50;
  std::uint64_t seed = 0;
  std::size_t iters = 10;
  double tau = kDefaultTau;
  std::optional<LineLayout> layout;  // default: positions start at the parameters
};

namespace detail {

inline std::vector<double> number_list(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array() || j.empty()) throw ConfigError(std::string(what) + ": expected a number or non-empty array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(std::string(what) + ": entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace detail

/// `{components:[{weight,mu,sigma}], kernel:{omega,variant,alphas?,sigma_max?,convention?},
///   n, seed, iters, tau, layout?:{start,end}}`. For the rescaled kernel a
/// missing sigma_max is taken from the mixture.
inline ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
    throw ConfigError("config: 'components' must be a non-empty array");
  std::vector<GaussianComponent> comps;
  std::vector<double> weights;
  for (const auto& c : j["components"]) {
    if (!c.contains("mu") || !c.contains("sigma")) throw ConfigError("config: component needs 'mu' and 'sigma'");
    comps.push_back({detail::number_list(c["mu"], "mu"), detail::number_list(c["sigma"], "sigma")});
    weights.push_back(detail::get_or<double>(c, "weight", j["components"].size() == 1 ? 1.0 : -1.0));
  }
  std::optional<MixtureModel> model;
  try {
    model.emplace(std::move(comps), std::move(weights));
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }

  KernelConfig k;
  const json kj = j.value("kernel", json::object());
  k.omega = detail::get_or<double>(kj, "omega", 1.0);
  k.variant = parse_variant(detail::get_or<std::string>(kj, "variant", "standard"));
  k.convention = parse_convention(detail::get_or<std::string>(kj, "convention", "matrix"));
  if (kj.contains("alphas")) k.alphas = detail::number_list(kj["alphas"], "alphas");
  if (kj.contains("sigma_max")) k.sigma_max = kj["sigma_max"].get<double>();
  if (k.variant == KernelVariant::rescaled && !k.sigma_max) k.sigma_max = model->max_sigma();
  k.validate(model->dimension());

  ExperimentConfig cfg{.model = *model, .kernel = k};
  cfg.n = detail::get_or<std::size_t>(j, "n", 50);
  cfg.seed = detail::get_or<std::uint64_t>(j, "seed", 0);
  cfg.iters = detail::get_or<std::size_t>(j, "iters", 10);
  cfg.tau = detail::get_or<double>(j, "tau", kDefaultTau);
  if (cfg.n == 0) throw ConfigError("config: n must be >= 1");
  if (!(cfg.tau > 0.0)) throw ConfigError("config: tau must be > 0");
  if (j.contains("layout")) {
    const auto& l = j["layout"];
    if (!l.contains("start") || !l.contains("end")) throw ConfigError("config: layout needs 'start' and 'end'");
    cfg.layout = LineLayout{detail::number_list(l["start"], "layout.start"), detail::number_list(l["end"], "layout.end")};
    if (cfg.layout->start.size() != cfg.layout->end.size())
      throw ConfigError("config: layout start and end differ in dimension");
  }
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return parse_config(j);
}

/// 17 significant digits: round-trips every double.
inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct SpectrumRun {
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<double>> top;  // per seed, non-increasing

  std::vector<double> mean() const {
    std::vector<double> m(top.empty() ? 0 : top[0].size(), 0.0);
    for (const auto& row : top)
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += row[k];
    for (double& v : m) v /= static_cast<double>(top.size());
    return m;
  }

  /// Sample standard deviation (0 for a single seed).
  std::vector<double> stddev() const {
    const auto mu = mean();
    std::vector<double> s(mu.size(), 0.0);
    if (top.size() < 2) return s;
    for (const auto& row : top)
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += (row[k] - mu[k]) * (row[k] - mu[k]);
    for (double& v : s) v = std::sqrt(v / static_cast<double>(top.size() - 1));
    return s;
  }
};

inline void write_spectrum_csv(std::ostream& out, const SpectrumRun& run) {
  const std::size_t k = run.top.empty() ? 0 : run.top[0].size();
  out << "seed";
  for (std::size_t i = 0; i < k; ++i) out << ",lambda_" << i;
  out << '\n';
  for (std::size_t s = 0; s < run.top.size(); ++s) {
    out << run.seeds[s];
    for (double v : run.top[s]) out << ',' << fmt(v);
    out << '\n';
  }
  out << "mean";
  for (double v : run.mean()) out << ',' << fmt(v);
  out << "\nstd";
  for (double v : run.stddev()) out << ',' << fmt(v);
  out << '\n';
}

/// iter,point_id,pos_1..m,param_1..l,cluster_id,npos_1..m
inline void write_trajectory_csv(std::ostream& out, const Trajectory& t,
                                 const std::vector<std::size_t>& frames = {}) {
  if (t.states.empty()) return;
  const auto m = t.states[0].cols();
  const auto l = t.params.cols();
  out << "iter,point_id";
  for (Eigen::Index c = 0; c < m; ++c) out << ",pos_" << c + 1;
  for (Eigen::Index c = 0; c < l; ++c) out << ",param_" << c + 1;
  out << ",cluster_id";
  for (Eigen::Index c = 0; c < m; ++c) out << ",npos_" << c + 1;
  out << '\n';
  auto emit = [&](std::size_t it) {
    const auto& y = t.states[it];
    const Eigen::MatrixXd ny = normalized_coordinates(y);
    for (Eigen::Index i = 0; i < y.rows(); ++i) {
      out << it << ',' << i;
      for (Eigen::Index c = 0; c < m; ++c) out << ',' << fmt(y(i, c));
      for (Eigen::Index c = 0; c < l; ++c) out << ',' << fmt(t.params(i, c));
      out << ',' << t.cluster_labels[it][static_cast<std::size_t>(i)];
      for (Eigen::Index c = 0; c < m; ++c) out << ',' << fmt(ny(i, c));
      out << '\n';
    }
  };
  if (frames.empty()) {
    for (std::size_t it = 0; it < t.states.size(); ++it) emit(it);
  } else {
    for (std::size_t it : frames)
      if (it < t.states.size()) emit(it);
  }
}

inline void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "n,median_delta2,bk_bound\n";
  for (const auto& r : rows) out << r.n << ',' << fmt(r.median_delta2) << ',' << fmt(r.bk_bound) << '\n';
}

/// i,lambda,ratio where ratio = lambda_i / lambda_{i-1} (empty for i = 0).
inline void write_analytic_csv(std::ostream& out, const std::vector<double>& lambdas) {
  out << "i,lambda,ratio\n";
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    out << i << ',' << fmt(lambdas[i]) << ',';
    if (i > 0) out << fmt(lambdas[i] / lambdas[i - 1]);
    out << '\n';
  }
}

inline json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json to_json(const BoundReport& b) {
  json j;
  j["certified"] = b.certified;
  j["reasons"] = b.reasons;
  j["pi1"] = number(b.pi1);
  j["pi2"] = number(b.pi2);
  j["lambda1_interval"] = {number(b.lambda1_interval.lower), number(b.lambda1_interval.upper)};
  j["upper_statement_form"] = number(b.upper_statement_form);
  j["lambda0_sandwich"] = {number(b.lambda0_sandwich.lower), number(b.lambda0_sandwich.upper)};
  j["lambda0"] = number(b.lambda0);
  j["r"] = number(b.r);
  j["gamma0"] = number(b.gamma0);
  j["gamma1"] = number(b.gamma1);
  j["nu0"] = number(b.nu0);
  j["nu1"] = number(b.nu1);
  j["t"] = number(b.t);
  j["t_overridden"] = b.t_overridden;
  j["eps"] = number(b.eps);
  j["delta_norm"] = number(b.delta_norm);
  j["delta_norm_fallback"] = b.delta_norm_fallback;
  j["A"] = number(b.A);
  j["Delta"] = number(b.Delta);
  j["F"] = number(b.F);
  j["e_abs"] = number(b.e_abs);
  j["norm_K_P2xP"] = number(b.norm_K_P2xP);
  j["norm_K_P1xP1"] = number(b.norm_K_P1xP1);
  j["norm_phi11_P2"] = number(b.norm_phi11_P2);
  j["norm_phi01_P2"] = number(b.norm_phi01_P2);
  j["norm_phi11_P"] = number(b.norm_phi11_P);
  j["norm_phi01_P"] = number(b.norm_phi01_P);
  j["cross_term"] = number(b.cross_term);
  j["lower_numerator"] = number(b.lower_numerator);
  j["D1"] = number(b.D1);
  j["D2"] = number(b.D2);
  json values = json::object();
  for (const auto& [k, v] : b.oracle_values) values[k] = number(v);
  json residuals = json::object();
  for (const auto& [k, v] : b.oracle_residuals) residuals[k] = number(v);
  j["oracle_values"] = values;
  j["oracle_residuals"] = residuals;
  return j;
}

inline json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}};
}

}  // namespace simspec::io
