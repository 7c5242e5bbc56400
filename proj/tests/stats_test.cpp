#include "mahh/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "mahh/rng.hpp"

namespace mahh {
namespace {

TEST(Summarize, Examples) {
  const Summary s = summarize(std::vector<double>{1, 2, 3});
  EXPECT_EQ(s.count, 3u);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.sd, 1.0);
  EXPECT_DOUBLE_EQ(s.se, 1.0 / std::sqrt(3.0));
  EXPECT_EQ(s.min, 1.0);
  EXPECT_EQ(s.max, 3.0);

  const Summary one = summarize(std::vector<double>{5});
  EXPECT_EQ(one.mean, 5.0);
  EXPECT_EQ(one.sd, 0.0);
  EXPECT_EQ(one.se, 0.0);

  EXPECT_EQ(summarize(std::vector<double>(10, 0.7)).sd, 0.0);
  EXPECT_THROW(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST(Summarize, IntegerOverload) {
  const Summary s = summarize(std::vector<std::uint64_t>{2, 4, 6, 8});
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
}

TEST(StatsProperty, SummarizePermutationInvariant) {
  Rng rng(1);
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(uniform01(rng) * 1e6 + 1e-3 * i);
  const Summary a = summarize(v);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(v.begin(), v.end(), rng);
    const Summary b = summarize(v);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.sd, b.sd);
  }
  EXPECT_LE(a.min, a.mean);
  EXPECT_LE(a.mean, a.max);
}

Summary make_summary(double mean, double se) {
  Summary s;
  s.count = 100;
  s.mean = mean;
  s.se = se;
  s.sd = se * 10;
  return s;
}

TEST(ZCompare, Examples) {
  const ZResult pass = z_compare(make_summary(100, 5), 110, 3);
  EXPECT_TRUE(pass.pass);
  EXPECT_DOUBLE_EQ(pass.z, -2.0);
  const ZResult fail = z_compare(make_summary(100, 1), 110, 3);
  EXPECT_FALSE(fail.pass);
  EXPECT_DOUBLE_EQ(fail.z, -10.0);
  EXPECT_TRUE(z_compare(make_summary(7, 0), 7).pass);
  EXPECT_FALSE(z_compare(make_summary(7, 0), 8).pass);
}

TEST(StatsProperty, ZCompareReflectionSymmetric) {
  for (double delta : {0.5, 2.9, 3.1, 10.0}) {
    const ZResult above = z_compare(make_summary(50 + delta, 1), 50);
    const ZResult below = z_compare(make_summary(50 - delta, 1), 50);
    EXPECT_EQ(above.pass, below.pass);
    EXPECT_DOUBLE_EQ(above.z, -below.z);
  }
}

TEST(ChiSquare, KnownValue) {
  const std::vector<double> obs{10, 20, 30}, exp{20, 20, 20};
  const ChiSquareResult r = chi_square_gof(obs, exp);
  EXPECT_DOUBLE_EQ(r.statistic, 10.0);
  EXPECT_EQ(r.dof, 2);
  EXPECT_NEAR(r.p_value, std::exp(-5.0), 1e-12);
  EXPECT_THROW(chi_square_gof(obs, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST(GeometricFit, Examples) {
  EXPECT_EQ(fit_geometric(std::vector<std::uint64_t>{1, 1, 1, 1}).p_hat, 1.0);
  EXPECT_EQ(fit_geometric(std::vector<std::uint64_t>{2, 2, 2, 2}).p_hat, 0.5);
  EXPECT_THROW(fit_geometric(std::vector<std::uint64_t>{}), std::invalid_argument);
  EXPECT_THROW(fit_geometric(std::vector<std::uint64_t>{0, 1}), std::invalid_argument);
}

std::vector<std::uint64_t> geometric_sample(double q, int count, Rng& rng) {
  std::vector<std::uint64_t> v;
  for (int i = 0; i < count; ++i) {
    std::uint64_t k = 1;
    while (!bernoulli(rng, q)) ++k;
    v.push_back(k);
  }
  return v;
}

TEST(GeometricFit, SelfTest) {
  int passed = 0;
  const int seeds = 100;
  for (int seed = 0; seed < seeds; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const GeometricFit fit = fit_geometric(geometric_sample(0.3, 10000, rng));
    EXPECT_NEAR(fit.p_hat, 0.3, 0.02);
    passed += fit.test.p_value > 0.01 ? 1 : 0;
  }
  EXPECT_GE(passed, 97);
}

TEST(GeometricFit, RejectsOtherLaw) {
  // Counts that are always 1 or 3 are far from geometric.
  std::vector<std::uint64_t> v;
  for (int i = 0; i < 2000; ++i) v.push_back(i % 2 == 0 ? 1 : 3);
  EXPECT_LT(fit_geometric(v).test.p_value, 1e-6);
}

TEST(LogLog, ExactPowers) {
  const std::vector<std::pair<double, double>> cubes{{8, 512}, {16, 4096}};
  EXPECT_NEAR(loglog_slope(cubes).slope, 3.0, 1e-12);

  const std::vector<std::pair<double, double>> squares{{2, 4}, {4, 16}, {8, 64}};
  const LogLogFit sq = loglog_slope(squares);
  EXPECT_NEAR(sq.slope, 2.0, 1e-12);
  EXPECT_NEAR(sq.residual, 0.0, 1e-20);

  std::vector<std::pair<double, double>> sixth;
  for (double n : {5.0, 10.0, 20.0, 40.0}) sixth.emplace_back(n, n * n * n / 6.0);
  const LogLogFit fit = loglog_slope(sixth);
  EXPECT_NEAR(fit.slope, 3.0, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(1.0 / 6.0), 1e-12);
  EXPECT_NEAR(fit.residual, 0.0, 1e-20);
}

TEST(LogLog, RejectsBadInput) {
  EXPECT_THROW(loglog_slope(std::vector<std::pair<double, double>>{{2, 4}}), std::invalid_argument);
  EXPECT_THROW(loglog_slope(std::vector<std::pair<double, double>>{{2, 4}, {2, 5}}), std::invalid_argument);
  EXPECT_THROW(loglog_slope(std::vector<std::pair<double, double>>{{2, 4}, {3, -1}}), std::invalid_argument);
}

}  // namespace
}  // namespace mahh
