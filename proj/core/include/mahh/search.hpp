#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mahh/bit_string.hpp"
#include "mahh/fitness.hpp"
#include "mahh/rng.hpp"

namespace mahh {

enum class MutationKind { OneBit, Bitwise };

struct MutationOperator {
  MutationKind kind = MutationKind::OneBit;
  /// Per-bit flip probability; only meaningful for Bitwise.
  double rate = 0.0;

  static MutationOperator one_bit() { return {MutationKind::OneBit, 0.0}; }
  static MutationOperator bitwise(double rate) { return {MutationKind::Bitwise, rate}; }
};

enum class AcceptanceRule { AllMoves, OnlyImproving, ImprovingAndEqual };

std::string_view to_string(AcceptanceRule rule);

/// One member of the MAHH family: each iteration uses AllMoves with
/// probability p and `elitist_rule` otherwise. (1+1) EA and RLS are the
/// p = 0 members.
struct AlgorithmConfig {
  std::string name;
  MutationOperator mutation;
  double p = 0.0;
  AcceptanceRule elitist_rule = AcceptanceRule::OnlyImproving;

  /// Throws std::invalid_argument on p outside [0,1], a non-elitist
  /// elitist_rule, or a Bitwise rate outside (0,1].
  void validate() const;
};

/// "mahh-onebit", "mahh-global", "opo-ea" or "rls". Bitwise variants flip
/// at rate 1/n.
AlgorithmConfig baseline_config(std::string_view name, int n, double p);

struct SearchState {
  BitString x;
  Fitness fitness;
  std::uint64_t step_count = 0;

  static SearchState start(const FitnessFunction& f, BitString x);
  int level() const noexcept { return static_cast<int>(x.one_count()); }
};

struct StepEvent {
  int level_before = 0;
  int level_after = 0;
  bool accepted = false;
  AcceptanceRule rule_used = AcceptanceRule::OnlyImproving;
  /// Bits flipped in the mutant (accepted or not).
  int flipped = 0;
};

BitString mutate_one_bit(const BitString& x, Rng& rng);
BitString mutate_bitwise(const BitString& x, double rate, Rng& rng);

bool decide_acceptance(AcceptanceRule rule, Fitness current, Fitness candidate);

/// One iteration. Draw order per step is fixed: mutation draws first, then a
/// single uniform draw for the acceptance operator (taken even when p is 0
/// or 1), so trajectories depend only on the seed.
StepEvent step(SearchState& state, const AlgorithmConfig& cfg,
               const FitnessFunction& f, Rng& rng);

struct UniformStart {};
struct LevelStart {
  int level = 0;
};
struct LocalOptimumStart {};
using StartPolicy = std::variant<UniformStart, LevelStart, LocalOptimumStart, BitString>;

/// "uniform-random", "level=K", "local-optimum" or an explicit 0/1 string.
StartPolicy parse_start_policy(std::string_view text);
std::string to_string(const StartPolicy& start);
BitString draw_start(const StartPolicy& start, const FitnessFunction& f, Rng& rng);

using StepObserver = std::function<void(const StepEvent&)>;

struct TrajectorySummary {
  int start_level = 0;
  int final_level = 0;
  /// Iterations performed; equals the runtime T when hit_optimum.
  std::uint64_t steps = 0;
  bool hit_optimum = false;
  bool censored = false;
  /// Level after each iteration, preceded by the start level. Only filled
  /// when requested.
  std::vector<int> levels;

  friend bool operator==(const TrajectorySummary&, const TrajectorySummary&) = default;
};

/// Runs until the global optimum is evaluated or `cap` iterations have been
/// performed. A capped run is returned flagged censored.
TrajectorySummary run_trial_raw(const AlgorithmConfig& cfg, const FitnessFunction& f,
                                const StartPolicy& start, std::uint64_t seed,
                                std::uint64_t cap, bool record_levels = false,
                                const StepObserver& observer = {});

}  // namespace mahh
