#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mahh/fitness.hpp"
#include "mahh/search.hpp"

namespace mahh {

/// One trial on Jump_m. T1 is the first hitting time of X* = {levels n-m, n};
/// it and N are absent when a capped run never got there.
struct RunRecord {
  std::string algo;
  int n = 0;
  int m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::uint64_t T = 0;
  std::optional<std::uint64_t> T1;
  std::optional<std::uint64_t> N;
  bool censored = false;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Visits to X*: P[0] = T1 and P[i+1] = min{t > P[i] : X_t in X*}.
/// lengths[i] = P[i+1] - P[i]. N is set once X_{P_N} is the optimum.
struct PhaseTrace {
  std::optional<std::uint64_t> T1;
  std::vector<std::uint64_t> P;
  std::vector<std::uint64_t> lengths;
  std::optional<std::uint64_t> N;

  bool complete() const noexcept { return N.has_value(); }

  friend bool operator==(const PhaseTrace&, const PhaseTrace&) = default;
};

/// Online phase decomposition of a level sequence X_0, X_1, ...
class PhaseTracker {
 public:
  PhaseTracker(int n, int m);

  void observe(int level);
  std::uint64_t observed() const noexcept { return time_; }
  const PhaseTrace& trace() const noexcept { return trace_; }

 private:
  int n_;
  int local_;
  std::uint64_t time_ = 0;
  PhaseTrace trace_;
};

PhaseTrace decompose_phases(std::span<const int> levels, int n, int m);

struct TrialResult {
  RunRecord record;
  PhaseTrace phases;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// run_trial_raw on Jump with X* membership tracked online.
TrialResult run_trial(const AlgorithmConfig& cfg, const FitnessFunction& f,
                      const StartPolicy& start, std::uint64_t seed, std::uint64_t cap,
                      std::uint64_t trial_index = 0);

struct BatchOptions {
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  std::uint64_t cap = 1'000'000'000;
  StartPolicy start = UniformStart{};
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 1;
};

/// Trial i runs with derive_seed(base_seed, i). Results are in trial order
/// and identical for every value of `jobs`.
std::vector<TrialResult> run_batch(const AlgorithmConfig& cfg, const FitnessFunction& f,
                                   const BatchOptions& options);

struct DriftEstimate {
  int level = 0;
  int potential = 0;
  std::size_t samples = 0;
  double mean = 0.0;
  double se = 0.0;
  /// Observed d(X_t) - d(X_{t+1}) values and their counts.
  std::map<int, std::uint64_t> histogram;
};

/// Empirical one-step drift of the potential d at a level: each sample
/// starts from a fresh uniform string with `level` one-bits and performs
/// one step.
DriftEstimate estimate_drift(const AlgorithmConfig& cfg, const FitnessFunction& f, int level,
                             std::size_t samples, std::uint64_t seed);

}  // namespace mahh
