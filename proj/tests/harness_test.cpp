#include "mahh/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mahh/level_chain.hpp"
#include "mahh/stats.hpp"

namespace mahh {
namespace {

// Exact one-step drift of d by enumerating every mutation outcome from one
// string at the level. Unitation makes the choice of string irrelevant.
double exact_drift(const AlgorithmConfig& cfg, const FitnessFunction& f, int level) {
  const int n = f.n();
  BitString x(static_cast<std::size_t>(n));
  for (int i = 0; i < level; ++i) x.flip(static_cast<std::size_t>(i));
  const Fitness fx = evaluate(f, x);
  const int dx = potential_d(f, x);
  auto accept_probability = [&](const BitString& y) {
    const bool elitist = decide_acceptance(cfg.elitist_rule, fx, evaluate(f, y));
    return cfg.p + (1.0 - cfg.p) * (elitist ? 1.0 : 0.0);
  };
  double drift = 0.0;
  if (cfg.mutation.kind == MutationKind::OneBit) {
    for (int i = 0; i < n; ++i) {
      BitString y = x;
      y.flip(static_cast<std::size_t>(i));
      drift += accept_probability(y) * (dx - potential_d(f, y)) / n;
    }
    return drift;
  }
  const double r = cfg.mutation.rate;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    BitString y = x;
    int flips = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        y.flip(static_cast<std::size_t>(i));
        ++flips;
      }
    }
    const double prob = std::pow(r, flips) * std::pow(1.0 - r, n - flips);
    drift += prob * accept_probability(y) * (dx - potential_d(f, y));
  }
  return drift;
}

TEST(Phases, HandTrace) {
  const std::vector<int> levels{3, 4, 4, 5, 4, 6};
  const PhaseTrace t = decompose_phases(levels, 6, 2);
  EXPECT_EQ(t.T1, 1u);
  EXPECT_EQ(t.lengths, (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(t.P, (std::vector<std::uint64_t>{1, 2, 4, 5}));
  EXPECT_EQ(t.N, 3u);
}

TEST(Phases, StartInLocalOptimum) {
  const PhaseTrace t = decompose_phases(std::vector<int>{4}, 6, 2);
  EXPECT_EQ(t.T1, 0u);
  EXPECT_TRUE(t.lengths.empty());
  EXPECT_FALSE(t.N.has_value());
}

TEST(Phases, StartAtOptimum) {
  const PhaseTrace t = decompose_phases(std::vector<int>{6}, 6, 2);
  EXPECT_EQ(t.T1, 0u);
  EXPECT_EQ(t.N, 0u);
  EXPECT_TRUE(t.lengths.empty());
}

TEST(Phases, NeverReachesTargetSet) {
  const PhaseTrace t = decompose_phases(std::vector<int>{0, 1, 2, 1}, 6, 2);
  EXPECT_FALSE(t.T1.has_value());
  EXPECT_FALSE(t.complete());
  EXPECT_THROW(decompose_phases(std::vector<int>{}, 6, 2), std::invalid_argument);
}

TEST(Phases, OnlineTrackerMatchesOffline) {
  const auto f = FitnessFunction::jump(9, 2);
  const AlgorithmConfig cfg = baseline_config("mahh-onebit", 9, 0.25);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto raw = run_trial_raw(cfg, f, UniformStart{}, seed, 1'000'000, true);
    const TrialResult result = run_trial(cfg, f, UniformStart{}, seed, 1'000'000, seed);
    EXPECT_EQ(result.phases, decompose_phases(raw.levels, 9, 2));
    EXPECT_EQ(result.record.T, raw.steps);
    EXPECT_EQ(result.record.N, result.phases.N);
    EXPECT_EQ(result.record.T1, result.phases.T1);
    EXPECT_EQ(result.record.trial, seed);
  }
}

TEST(Trial, CensoredRecord) {
  const auto f = FitnessFunction::jump(20, 4);
  const TrialResult r = run_trial(baseline_config("mahh-onebit", 20, 0.01), f, LocalOptimumStart{}, 3, 10);
  EXPECT_TRUE(r.record.censored);
  EXPECT_FALSE(r.record.N.has_value());
  EXPECT_EQ(r.record.T, 10u);
  EXPECT_EQ(r.record.T1, 0u);
}

TEST(Batch, ParallelismDoesNotChangeResults) {
  const auto f = FitnessFunction::jump(10, 2);
  const AlgorithmConfig cfg = baseline_config("mahh-global", 10, 0.02);
  BatchOptions options;
  options.trials = 64;
  options.base_seed = 99;
  options.jobs = 1;
  const auto serial = run_batch(cfg, f, options);
  options.jobs = 8;
  const auto parallel = run_batch(cfg, f, options);
  EXPECT_EQ(serial, parallel);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].record.trial, i);
    EXPECT_EQ(serial[i].record.seed, derive_seed(99, i));
  }
}

TEST(Batch, RejectsZeroTrials) {
  BatchOptions options;
  options.trials = 0;
  EXPECT_THROW(run_batch(baseline_config("rls", 5, 0), FitnessFunction::jump(5, 1), options),
               std::invalid_argument);
}

TEST(Batch, MeanRuntimeMatchesExact) {
  const auto f = FitnessFunction::jump(8, 2);
  BatchOptions options;
  options.trials = 10000;
  options.base_seed = 2024;
  const auto results = run_batch(baseline_config("mahh-onebit", 8, 0.25), f, options);
  std::vector<double> t;
  for (const auto& r : results) {
    ASSERT_FALSE(r.record.censored);
    t.push_back(static_cast<double>(r.record.T));
  }
  const double exact = expected_runtime_uniform(build_level_chain(8, 2, Rational(1, 4))).to_double();
  const Summary s = summarize(t);
  EXPECT_TRUE(z_compare(s, exact).pass) << s.mean << " vs " << exact;
}

TEST(Batch, MeanPhaseLengthMatchesExact) {
  const int n = 20, m = 2;
  const auto f = FitnessFunction::jump(n, m);
  const AlgorithmConfig cfg = baseline_config("mahh-onebit", n, 0.1);
  BatchOptions options;
  options.trials = 40;
  options.base_seed = 5;
  options.start = LocalOptimumStart{};
  std::vector<double> lengths;
  for (const auto& r : run_batch(cfg, f, options)) {
    for (auto len : r.phases.lengths) lengths.push_back(static_cast<double>(len));
  }
  ASSERT_GE(lengths.size(), 10000u);
  const double exact = phase_statistics(build_level_chain(n, m, Rational(m, n))).expected_length.to_double();
  const Summary s = summarize(lengths);
  EXPECT_TRUE(z_compare(s, exact).pass) << s.mean << " vs " << exact;
}

TEST(Drift, OracleMatchesSlopeFormula) {
  // (n-k)/n - p k/n at level 5 of n = 10, m = 2.
  const AlgorithmConfig cfg = baseline_config("mahh-onebit", 10, 0.2);
  EXPECT_NEAR(exact_drift(cfg, FitnessFunction::jump(10, 2), 5), 0.4, 1e-12);
}

TEST(Drift, OracleInGapCountsJumpToOptimum) {
  // At level 9 of n = 10, m = 3 the down move is an improvement and the up
  // move reaches the optimum, lowering d from 2 to 0: 0.9 * 1 + 0.1 * 2.
  const AlgorithmConfig cfg = baseline_config("mahh-onebit", 10, 0.3);
  EXPECT_NEAR(exact_drift(cfg, FitnessFunction::jump(10, 3), 9), 1.1, 1e-12);
}

TEST(Drift, EmpiricalMatchesOracle) {
  struct Case {
    const char* algo;
    int n, m;
    double p;
    int level;
  };
  const Case cases[] = {{"mahh-onebit", 10, 2, 0.2, 5}, {"mahh-onebit", 10, 3, 0.3, 9},
                        {"mahh-onebit", 10, 3, 0.3, 8}, {"mahh-onebit", 10, 3, 0.3, 2},
                        {"mahh-global", 10, 3, 0.05, 4}, {"mahh-global", 10, 3, 0.05, 9},
                        {"opo-ea", 10, 2, 0.0, 9}};
  std::uint64_t seed = 1;
  for (const Case& c : cases) {
    const auto f = FitnessFunction::jump(c.n, c.m);
    const AlgorithmConfig cfg = baseline_config(c.algo, c.n, c.p);
    const DriftEstimate e = estimate_drift(cfg, f, c.level, 100000, seed++);
    EXPECT_EQ(e.potential, potential_d_at_level(f, c.level));
    const double exact = exact_drift(cfg, f, c.level);
    EXPECT_LE(std::abs(e.mean - exact), 3 * e.se) << c.algo << " level " << c.level << ": " << e.mean << " vs " << exact;
  }
}

TEST(Drift, HistogramSumsToSamples) {
  const auto f = FitnessFunction::jump(12, 3);
  const DriftEstimate e = estimate_drift(baseline_config("mahh-global", 12, 0.1), f, 10, 5000, 7);
  std::uint64_t total = 0;
  double sum = 0.0;
  for (auto [delta, count] : e.histogram) {
    total += count;
    sum += static_cast<double>(delta) * static_cast<double>(count);
  }
  EXPECT_EQ(total, 5000u);
  EXPECT_NEAR(sum / 5000.0, e.mean, 1e-12);
  EXPECT_THROW(estimate_drift(baseline_config("rls", 12, 0), f, 13, 10, 1), std::out_of_range);
}

TEST(DriftProperty, OneBitDriftAtLeastDOverN) {
  for (int m : {2, 3, 5}) {
    const int n = 10;
    const auto f = FitnessFunction::jump(n, m);
    for (double p : {1.0 / n, static_cast<double>(m) / n}) {
      const AlgorithmConfig cfg = baseline_config("mahh-onebit", n, p);
      for (int k = 0; k < n; ++k) {
        const int d = potential_d_at_level(f, k);
        if (d == 0) continue;
        const DriftEstimate e = estimate_drift(cfg, f, k, 20000, derive_seed(m, k));
        EXPECT_GE(e.mean, static_cast<double>(d) / n - 3 * e.se) << "m=" << m << " p=" << p << " k=" << k;
      }
    }
  }
}

TEST(DriftProperty, GlobalSlopeAndGapLowerBounds) {
  const int n = 20, m = 4;
  const double gamma = 0.25;
  const double p = gamma * m / (std::exp(1.0) * n);
  const double en = std::exp(1.0) * n;
  const auto f = FitnessFunction::jump(n, m);
  const AlgorithmConfig cfg = baseline_config("mahh-global", n, p);
  for (int k : {0, 5, 10, 15}) {
    const int d = potential_d_at_level(f, k);
    const DriftEstimate e = estimate_drift(cfg, f, k, 50000, derive_seed(17, k));
    const double bound = (1 - p) * d / en + (1 - p - gamma) * m / en;
    EXPECT_GE(e.mean, bound - 3 * e.se) << "level " << k;
  }
  for (int k = n - m + 1; k < n; ++k) {
    const DriftEstimate e = estimate_drift(cfg, f, k, 50000, derive_seed(19, k));
    EXPECT_GE(e.mean, (1 - 17 * p) / 16 - 3 * e.se) << "level " << k;
  }
}

TEST(WaldProperty, RuntimeDecomposes) {
  const int n = 10, m = 2;
  BatchOptions options;
  options.trials = 3000;
  options.base_seed = 77;
  const auto results = run_batch(baseline_config("mahh-onebit", n, 0.2), FitnessFunction::jump(n, m), options);
  // Disjoint halves keep the length estimate independent of the per-run
  // means it multiplies.
  std::vector<double> t, t1, count, lengths;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    ASSERT_TRUE(r.phases.complete());
    if (i % 2 == 0) {
      t.push_back(static_cast<double>(r.record.T));
      t1.push_back(static_cast<double>(*r.record.T1));
      count.push_back(static_cast<double>(*r.record.N));
    } else {
      for (auto len : r.phases.lengths) lengths.push_back(static_cast<double>(len));
    }
  }
  const Summary st = summarize(t), s1 = summarize(t1), sn = summarize(count), sl = summarize(lengths);
  const double predicted = s1.mean + sn.mean * sl.mean;
  const double se = std::sqrt(st.se * st.se + s1.se * s1.se + std::pow(sl.mean * sn.se, 2) +
                              std::pow(sn.mean * sl.se, 2));
  EXPECT_LE(std::abs(st.mean - predicted), 3 * se) << st.mean << " vs " << predicted;
}

}  // namespace
}  // namespace mahh
