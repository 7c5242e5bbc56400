#pragma once

#include <vector>

#include "mahh/fitness.hpp"
#include "mahh/rational.hpp"
#include "mahh/search.hpp"

namespace mahh {

/// Birth-death chain over one-count levels 0..n induced by one-bit
/// mutation and MAHH acceptance on a unitation function. Level n (the
/// optimum) is treated as absorbing. Self-loop probabilities are implicit.
struct LevelChain {
  int n = 0;
  /// Jump gap width, 0 when the chain was not built from a Jump function.
  int m = 0;
  Rational p;
  /// up[k] = P(k -> k+1) for k in [0..n-1].
  std::vector<Rational> up;
  /// down[k] = P(k -> k-1) for k in [0..n-1]; down[0] is always 0.
  std::vector<Rational> down;

  Rational up_at(int k) const;
  Rational down_at(int k) const;
  Rational stay_at(int k) const;
};

/// One-bit MAHH on Jump_m. Requires 1 <= m <= n-1 and 0 <= p <= 1.
LevelChain build_level_chain(int n, int m, const Rational& p);

/// One-bit mutation on any unitation function, accepting with AllMoves
/// (probability p) or `elitist_rule`.
LevelChain build_unitation_chain(const FitnessFunction& f, const Rational& p,
                                 AcceptanceRule elitist_rule = AcceptanceRule::OnlyImproving);

/// Expected time to reach level i+1 from level i, via the birth-death
/// sum  sum_{k<=i} (1/up_k) prod_{k<l<=i} (down_l/up_l).
ExtRational uphill_time_recurrence(const LevelChain& chain, int i);

/// Closed form for E[T_{n-1}^+] of the one-bit MAHH on Jump_m:
///   p^{n-2m+1} sum_{k=0}^{n-m-1} p^{-k} C(n,k) + p^{1-n} sum_{k=n-m}^{n-1} C(n,k) p^k.
/// Infinite for p = 0. Requires 1 <= m <= n-1.
ExtRational closed_form_last_uphill(int n, int m, const Rational& p);

/// h[k] = expected time to reach level n from level k, from the first-step
/// equations solved by tridiagonal elimination. Independent of the sum
/// formulas above.
std::vector<ExtRational> hitting_times_linear_solve(const LevelChain& chain);

ExtRational expected_runtime(const LevelChain& chain, int start_level);
/// Start drawn uniformly from {0,1}^n, i.e. level ~ Binomial(n, 1/2).
ExtRational expected_runtime_uniform(const LevelChain& chain);

/// Statistics of one phase started at the local optimum n-m (chain built
/// from Jump). A phase ends at the next visit to level n-m or n.
struct PhaseStatistics {
  ExtRational expected_length;
  /// Probability that a phase ends at the optimum.
  Rational success_probability;
  /// 1 / success_probability, Infinite when it is zero.
  ExtRational expected_phases;
};

PhaseStatistics phase_statistics(const LevelChain& chain);

}  // namespace mahh
