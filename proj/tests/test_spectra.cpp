#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "simspec/analytic.hpp"
#include "simspec/spectra.hpp"

using namespace simspec;

namespace {

double brute_delta2(std::vector<double> a, std::vector<double> b) {
  const std::size_t len = a.size() + b.size();  // negatives may pair with padding zeros
  a.resize(len, 0.0);
  b.resize(len, 0.0);
  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += (a[i] - b[perm[i]]) * (a[i] - b[perm[i]]);
    best = std::min(best, acc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::sqrt(best);
}

std::vector<double> random_sorted(std::mt19937_64& gen, std::size_t len, double lo) {
  std::uniform_real_distribution<double> u(lo, 1.0);
  std::vector<double> v(len);
  for (double& x : v) x = u(gen);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

KernelConfig op_kernel(double omega) { return KernelConfig{.omega = omega, .convention = Convention::operator_form}; }

}  // namespace

TEST(Delta2, Examples) {
  const std::vector<double> a{3.0, 1.0}, b{2.0, 2.0}, one{1.0}, none{};
  EXPECT_EQ(delta2(a, a), 0.0);
  EXPECT_DOUBLE_EQ(delta2(one, none), 1.0);
  EXPECT_DOUBLE_EQ(delta2(a, b), std::sqrt(2.0));
}

TEST(Delta2, RejectsUnsorted) {
  const std::vector<double> a{1.0, 2.0}, b{1.0};
  EXPECT_THROW(delta2(a, b), InputError);
  EXPECT_THROW(delta2(b, a), InputError);
}

TEST(Delta2, SortedMatchingIsOptimal) {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<std::size_t> len(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_sorted(gen, len(gen), 0.0);
    const auto b = random_sorted(gen, len(gen), 0.0);
    EXPECT_NEAR(delta2(a, b), brute_delta2(a, b), 1e-12);
  }
}

TEST(Delta2, MixedSignAgainstNonnegative) {
  std::mt19937_64 gen(23);
  std::uniform_int_distribution<std::size_t> len(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_sorted(gen, len(gen), -1.0);
    const auto b = random_sorted(gen, len(gen), 0.0);
    EXPECT_NEAR(delta2(a, b), brute_delta2(a, b), 1e-12);
  }
}

TEST(Delta2, MetricProperties) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_sorted(gen, 5, 0.0);
    const auto b = random_sorted(gen, 3, 0.0);
    const auto c = random_sorted(gen, 6, 0.0);
    EXPECT_EQ(delta2(a, b), delta2(b, a));
    EXPECT_LE(delta2(a, c), delta2(a, b) + delta2(b, c) + 1e-12);
    EXPECT_GT(delta2(a, b), 0.0);
  }
}

TEST(BkBound, Arithmetic) {
  EXPECT_DOUBLE_EQ(bk_bound(1.0, 100, 1.0), 0.2);
  EXPECT_DOUBLE_EQ(bk_bound(1.0, 400, 1.0), 0.1);
  EXPECT_DOUBLE_EQ(bk_bound(1.0, 10000, 2.0), 0.03);
  EXPECT_THROW(bk_bound(0.0, 10, 1.0), InputError);
  EXPECT_THROW(bk_bound(1.0, 0, 1.0), InputError);
}

TEST(Nystrom, SingleComponentMatchesClosedForm) {
  const MixtureModel m(GaussianComponent{{0.0}, {1.0}});
  const auto ev = nystrom_spectrum(m, op_kernel(1.0)).eigenvalues;
  EXPECT_NEAR(ev(0), 0.6180339887498949, 1e-6);
  EXPECT_NEAR(ev(1), 0.2360679774997897, 1e-6);
  EXPECT_NEAR(ev(2), 0.0901699437494742, 1e-6);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(ev(i), analytic_eigenvalue(i, 1.0, 1.0), 1e-6);
}

TEST(Nystrom, MatrixConventionIsOperatorWithScaledOmega) {
  const MixtureModel m(GaussianComponent{{2.0}, {0.8}});
  const auto a = nystrom_spectrum(m, KernelConfig{.omega = std::sqrt(2.0) * 1.3}, 256).eigenvalues;
  const auto b = nystrom_spectrum(m, op_kernel(1.3), 256).eigenvalues;
  EXPECT_LT((a - b).head(5).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Nystrom, DegenerateMixtureEqualsSingleComponent) {
  const MixtureModel single(GaussianComponent{{0.0}, {1.0}});
  const MixtureModel degenerate({GaussianComponent{{0.0}, {1.0}}, GaussianComponent{{0.0}, {0.5}}}, {1.0, 0.0});
  const auto a = nystrom_spectrum(single, op_kernel(1.0), 256).eigenvalues;
  const auto b = nystrom_spectrum(degenerate, op_kernel(1.0), 256).eigenvalues;
  EXPECT_LT((a - b).head(5).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Nystrom, GridRefinementStable) {
  const MixtureModel m({GaussianComponent{{-10.0}, {1.0}}, GaussianComponent{{15.0}, {1.0}}}, {0.98, 0.02});
  const auto a = nystrom_spectrum(m, op_kernel(1.0), 256).eigenvalues;
  const auto b = nystrom_spectrum(m, op_kernel(1.0), 512).eigenvalues;
  EXPECT_LT((a - b).head(5).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Nystrom, EigenfunctionIsNormalisedAndExtendsOffGrid) {
  const MixtureModel m(GaussianComponent{{0.0}, {1.0}});
  const NystromOperator op(m, op_kernel(1.0), 256);
  const Eigen::VectorXd mass = op.mass();
  for (int k = 0; k < 3; ++k) {
    double norm = 0.0;
    for (Eigen::Index j = 0; j < mass.size(); ++j) norm += mass(j) * std::pow(op.eigenfunction(k, op.nodes()(j)), 2);
    EXPECT_NEAR(norm, 1.0, 1e-8);
    const auto phi = analytic_eigenfunction(k, 0.0, 1.0, 1.0);
    for (double x : {-1.3, 0.2, 0.77, 2.0}) EXPECT_NEAR(std::abs(op.eigenfunction(k, x)), std::abs(phi(x)), 1e-6);
  }
}

TEST(Nystrom, Errors) {
  const MixtureModel m2(GaussianComponent{{0.0, 0.0}, {1.0, 1.0}});
  EXPECT_THROW(nystrom_spectrum(m2, op_kernel(1.0)), UnsupportedError);
  const MixtureModel m(GaussianComponent{{0.0}, {1.0}});
  EXPECT_THROW(nystrom_spectrum(m, op_kernel(1.0), 32), InputError);
  KernelConfig r{.omega = 1.0, .variant = KernelVariant::rescaled, .sigma_max = 1.0};
  EXPECT_THROW(nystrom_spectrum(m, r), UnsupportedError);
}

TEST(Nystrom, TruncationKeepsPositiveHead) {
  const MixtureModel m(GaussianComponent{{0.0}, {1.0}});
  const auto s = nystrom_spectrum(m, op_kernel(1.0), 128);
  const auto t = s.truncated(1e-12);
  ASSERT_FALSE(t.empty());
  for (double v : t) EXPECT_GT(v, 1e-12);
  EXPECT_TRUE(is_non_increasing(t));
}

TEST(Convergence, SeedsAreDistinctPerRepetitionAndN) {
  EXPECT_NE(convergence_seed(0, 50, 0), convergence_seed(0, 50, 1));
  EXPECT_NE(convergence_seed(0, 50, 0), convergence_seed(0, 100, 0));
}

TEST(Convergence, PreconditionsChecked) {
  const MixtureModel m(GaussianComponent{{0.0}, {1.0}});
  EXPECT_THROW(convergence_experiment(m, op_kernel(1.0), {50}, 5), InputError);
  EXPECT_THROW(convergence_experiment(m, op_kernel(1.0), {100, 50}, 10), InputError);
  EXPECT_THROW(convergence_experiment(m, op_kernel(1.0), {}, 10), InputError);
}

TEST(Convergence, MediansDecreaseAtRootNRate) {
  const MixtureModel m({GaussianComponent{{-10.0}, {1.0}}, GaussianComponent{{15.0}, {1.0}}}, {0.98, 0.02});
  const auto rows = convergence_experiment(m, op_kernel(1.0), {50, 100, 200, 400}, 20, 0, 256);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].median_delta2, rows[i - 1].median_delta2);
  for (std::size_t i = 0; i + 2 < rows.size(); ++i) {
    const double ratio = rows[i].median_delta2 / rows[i + 2].median_delta2;
    EXPECT_GE(ratio, 1.4);
    EXPECT_LE(ratio, 2.8);
  }
  EXPECT_DOUBLE_EQ(rows[1].bk_bound, 0.2);
}

TEST(Median, OddAndEven) {
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
  EXPECT_THROW(median({}), InputError);
}
