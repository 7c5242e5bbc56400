#include "mahh/harness.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mahh/stats.hpp"

namespace mahh {

PhaseTracker::PhaseTracker(int n, int m) : n_(n), local_(n - m) {
  if (m < 1 || m > n) throw std::invalid_argument("PhaseTracker: need 1 <= m <= n");
}

void PhaseTracker::observe(int level) {
  const std::uint64_t t = time_++;
  if (trace_.N) return;
  if (level != local_ && level != n_) return;
  if (!trace_.T1) {
    trace_.T1 = t;
  } else {
    trace_.lengths.push_back(t - trace_.P.back());
  }
  trace_.P.push_back(t);
  if (level == n_) trace_.N = trace_.lengths.size();
}

PhaseTrace decompose_phases(std::span<const int> levels, int n, int m) {
  if (levels.empty()) throw std::invalid_argument("decompose_phases: empty level sequence");
  PhaseTracker tracker(n, m);
  for (int level : levels) tracker.observe(level);
  return tracker.trace();
}

TrialResult run_trial(const AlgorithmConfig& cfg, const FitnessFunction& f,
                      const StartPolicy& start, std::uint64_t seed, std::uint64_t cap,
                      std::uint64_t trial_index) {
  const int m = f.gap();
  PhaseTracker tracker(f.n(), m);
  auto observer = [&tracker](const StepEvent& event) {
    if (tracker.observed() == 0) tracker.observe(event.level_before);
    tracker.observe(event.level_after);
  };
  const TrajectorySummary summary = run_trial_raw(cfg, f, start, seed, cap, false, observer);
  if (tracker.observed() == 0) tracker.observe(summary.start_level);

  TrialResult result;
  result.phases = tracker.trace();
  RunRecord& r = result.record;
  r.algo = cfg.name;
  r.n = f.n();
  r.m = m;
  r.p = cfg.p;
  r.seed = seed;
  r.trial = trial_index;
  r.T = summary.steps;
  r.T1 = result.phases.T1;
  r.N = result.phases.N;
  r.censored = summary.censored;
  return result;
}

std::vector<TrialResult> run_batch(const AlgorithmConfig& cfg, const FitnessFunction& f,
                                   const BatchOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("run_batch: trials must be >= 1");
  cfg.validate();
  f.gap();

  std::vector<TrialResult> results(options.trials);
  unsigned jobs = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(options.trials)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < options.trials; i = next++) {
      try {
        results[i] = run_trial(cfg, f, options.start, derive_seed(options.base_seed, i),
                               options.cap, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = options.trials;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

DriftEstimate estimate_drift(const AlgorithmConfig& cfg, const FitnessFunction& f, int level,
                             std::size_t samples, std::uint64_t seed) {
  if (level < 0 || level > f.n()) throw std::out_of_range("estimate_drift: level outside [0..n]");
  if (samples < 1) throw std::invalid_argument("estimate_drift: samples must be >= 1");
  cfg.validate();

  DriftEstimate estimate;
  estimate.level = level;
  estimate.potential = potential_d_at_level(f, level);
  estimate.samples = samples;

  Rng rng(seed);
  std::vector<double> deltas;
  deltas.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    SearchState state = SearchState::start(
        f, BitString::with_level(static_cast<std::size_t>(f.n()), static_cast<std::size_t>(level), rng));
    const StepEvent event = step(state, cfg, f, rng);
    const int delta = estimate.potential - potential_d_at_level(f, event.level_after);
    ++estimate.histogram[delta];
    deltas.push_back(delta);
  }
  const Summary summary = summarize(std::span<const double>(deltas));
  estimate.mean = summary.mean;
  estimate.se = summary.se;
  return estimate;
}

}  // namespace mahh
