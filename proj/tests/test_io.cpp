#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "simspec/io.hpp"

using namespace simspec;
using simspec::io::json;

namespace {

json table1_json() {
  return json::parse(R"({
    "components": [
      {"weight": 0.98, "mu": [-10.0], "sigma": [1.0]},
      {"weight": 0.02, "mu": 15.0, "sigma": 1.0}
    ],
    "kernel": {"omega": 1.0, "variant": "standard", "convention": "operator"},
    "n": 50, "seed": 7, "iters": 5, "tau": 0.05
  })");
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Config, ParsesRefMixture) {
  const auto cfg = io::parse_config(table1_json());
  EXPECT_EQ(cfg.model.size(), 2u);
  EXPECT_EQ(cfg.model.weights()[0], 0.98);
  EXPECT_EQ(cfg.model.components()[1].mu[0], 15.0);
  EXPECT_EQ(cfg.kernel.convention, Convention::operator_form);
  EXPECT_EQ(cfg.n, 50u);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.iters, 5u);
  EXPECT_FALSE(cfg.layout.has_value());
}

TEST(Config, Defaults) {
  const auto cfg = io::parse_config(json::parse(R"({"components": [{"mu": [1.0, 2.0], "sigma": [1.0, 0.5]}]})"));
  EXPECT_EQ(cfg.model.weights()[0], 1.0);
  EXPECT_EQ(cfg.model.dimension(), 2u);
  EXPECT_EQ(cfg.kernel.convention, Convention::matrix);
  EXPECT_EQ(cfg.kernel.variant, KernelVariant::standard);
  EXPECT_EQ(cfg.kernel.omega, 1.0);
  EXPECT_EQ(cfg.n, 50u);
  EXPECT_EQ(cfg.tau, kDefaultTau);
}

TEST(Config, RescaledFillsSigmaMax) {
  json j = table1_json();
  j["kernel"]["variant"] = "rescaled";
  j["components"][1]["sigma"] = 3.0;
  const auto cfg = io::parse_config(j);
  ASSERT_TRUE(cfg.kernel.sigma_max.has_value());
  EXPECT_EQ(*cfg.kernel.sigma_max, 3.0);
}

TEST(Config, Layout) {
  json j = table1_json();
  j["layout"] = {{"start", {0.0, 0.0}}, {"end", {1.0, 2.0}}};
  const auto cfg = io::parse_config(j);
  ASSERT_TRUE(cfg.layout.has_value());
  EXPECT_EQ(cfg.layout->end[1], 2.0);
  j["layout"]["end"] = {1.0};
  EXPECT_THROW(io::parse_config(j), ConfigError);
}

TEST(Config, Errors) {
  EXPECT_THROW(io::parse_config(json::array()), ConfigError);
  EXPECT_THROW(io::parse_config(json::parse(R"({"components": []})")), ConfigError);
  EXPECT_THROW(io::parse_config(json::parse(R"({"components": [{"mu": 0.0}]})")), ConfigError);
  json j = table1_json();
  j["components"][0]["weight"] = 0.5;
  EXPECT_THROW(io::parse_config(j), ConfigError);
  j = table1_json();
  j["kernel"]["variant"] = "laplace";
  EXPECT_THROW(io::parse_config(j), ConfigError);
  j = table1_json();
  j["kernel"]["omega"] = -1.0;
  EXPECT_THROW(io::parse_config(j), ConfigError);
  j = table1_json();
  j["n"] = "fifty";
  EXPECT_THROW(io::parse_config(j), ConfigError);
  j = table1_json();
  j["tau"] = 0.0;
  EXPECT_THROW(io::parse_config(j), ConfigError);
  j = table1_json();
  j["kernel"]["variant"] = "weighted";
  EXPECT_THROW(io::parse_config(j), ConfigError);
  EXPECT_THROW(io::load_config("/nonexistent/simspec.json"), ConfigError);
}

TEST(Config, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "simspec_cfg.json";
  {
    std::ofstream out(path);
    out << table1_json().dump();
  }
  EXPECT_EQ(io::load_config(path).seed, 7u);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  EXPECT_THROW(io::load_config(path), ConfigError);
  std::remove(path.c_str());
}

TEST(Format, RoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) EXPECT_EQ(std::stod(io::fmt(x)), x);
}

TEST(SpectrumCsv, Layout) {
  io::SpectrumRun run{{0, 1}, {{0.6, 0.2}, {0.8, 0.4}}};
  std::ostringstream out;
  io::write_spectrum_csv(out, run);
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "seed,lambda_0,lambda_1");
  EXPECT_EQ(l[1].substr(0, 2), "0,");
  EXPECT_EQ(l[3].substr(0, 5), "mean,");
  EXPECT_NEAR(run.mean()[0], 0.7, 1e-15);
  EXPECT_NEAR(run.stddev()[1], std::sqrt(0.02), 1e-15);
}

TEST(TrajectoryCsv, HeaderAndRows) {
  const MixtureModel m(GaussianComponent{{0.0, 0.0}, {1.0, 1.0}});
  const auto t = run(sample(m, 4, 0), KernelConfig{.omega = 1.0}, 2);
  std::ostringstream out;
  io::write_trajectory_csv(out, t);
  const auto l = lines(out.str());
  EXPECT_EQ(l[0], "iter,point_id,pos_1,pos_2,param_1,param_2,cluster_id,npos_1,npos_2");
  EXPECT_EQ(l.size(), 1u + 3u * 4u);
  std::ostringstream sub;
  io::write_trajectory_csv(sub, t, {0, 2, 9});
  EXPECT_EQ(lines(sub.str()).size(), 1u + 2u * 4u);
}

TEST(AnalyticCsv, RatioColumn) {
  std::ostringstream out;
  io::write_analytic_csv(out, {0.5, 0.25});
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "i,lambda,ratio");
  EXPECT_EQ(l[1], "0,0.5,");
  EXPECT_EQ(l[2], "1,0.25,0.5");
}

TEST(ConvergenceCsv, Layout) {
  std::ostringstream out;
  io::write_convergence_csv(out, {{100, 0.01, 0.2}});
  EXPECT_EQ(lines(out.str())[0], "n,median_delta2,bk_bound");
  EXPECT_EQ(lines(out.str())[1].substr(0, 4), "100,");
}

TEST(BoundJson, NonFiniteBecomesNull) {
  BoundReport b;
  b.A = std::numeric_limits<double>::infinity();
  b.reasons = {"r < t violated"};
  const json j = io::to_json(b);
  EXPECT_TRUE(j["A"].is_null());
  EXPECT_EQ(j["certified"], false);
  EXPECT_EQ(j["reasons"][0], "r < t violated");
  EXPECT_TRUE(j["lambda1_interval"].is_array());
  EXPECT_EQ(io::error_json("input", "bad")["error"], "input");
}
