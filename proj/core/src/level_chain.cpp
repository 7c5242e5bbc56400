#include "mahh/level_chain.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace mahh {
namespace {

// Levels from which the process hits a target with probability one. A
// non-target level qualifies iff no level reachable from it (before a
// target) is a dead end that cannot reach a target.
std::vector<bool> surely_absorbed(const LevelChain& chain, const std::vector<bool>& target) {
  const int n = chain.n;
  std::vector<bool> can_reach(target);
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k <= n; ++k) {
      if (can_reach[k]) continue;
      const bool via_up = k < n && chain.up_at(k).sign() > 0 && can_reach[k + 1];
      const bool via_down = k > 0 && chain.down_at(k).sign() > 0 && can_reach[k - 1];
      if (via_up || via_down) {
        can_reach[k] = true;
        changed = true;
      }
    }
  }
  std::vector<bool> doomed(n + 1, false);
  for (int k = 0; k <= n; ++k) doomed[k] = !can_reach[k];
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k <= n; ++k) {
      if (doomed[k] || target[k]) continue;
      const bool via_up = k < n && chain.up_at(k).sign() > 0 && !target[k + 1] && doomed[k + 1];
      const bool via_down = k > 0 && chain.down_at(k).sign() > 0 && !target[k - 1] && doomed[k - 1];
      if (via_up || via_down) {
        doomed[k] = true;
        changed = true;
      }
    }
  }
  std::vector<bool> finite(n + 1);
  for (int k = 0; k <= n; ++k) finite[k] = !doomed[k];
  return finite;
}

// First-step equations  (up_k + down_k) x_k - up_k x_{k+1} - down_k x_{k-1} = cost
// on non-target levels, x fixed to `boundary` on targets. Each maximal run of
// surely-absorbed non-target levels is one tridiagonal system (Thomas
// elimination). Levels that are not surely absorbed get std::nullopt.
std::vector<std::optional<Rational>> solve_first_step(const LevelChain& chain,
                                                      const std::vector<bool>& target,
                                                      const std::vector<Rational>& boundary,
                                                      const Rational& cost) {
  const int n = chain.n;
  const std::vector<bool> finite = surely_absorbed(chain, target);
  std::vector<std::optional<Rational>> x(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (target[k]) x[k] = boundary[k];
  }

  auto solvable = [&](int k) { return !target[k] && finite[k]; };
  int k = 0;
  while (k <= n) {
    if (!solvable(k)) {
      ++k;
      continue;
    }
    const int first = k;
    while (k + 1 <= n && solvable(k + 1)) ++k;
    const int last = k;
    ++k;

    const std::size_t len = static_cast<std::size_t>(last - first + 1);
    std::vector<Rational> super(len), rhs(len);
    Rational prev_super, prev_rhs;
    for (std::size_t j = 0; j < len; ++j) {
      const int level = first + static_cast<int>(j);
      const Rational u = chain.up_at(level);
      const Rational d = chain.down_at(level);
      const Rational diag = u + d;
      const Rational sub = j > 0 ? -d : Rational(0);
      Rational sup = (level < last) ? -u : Rational(0);
      Rational r = cost;
      if (j == 0 && level > 0 && target[level - 1]) r += d * boundary[level - 1];
      if (level == last && level < n && target[level + 1]) r += u * boundary[level + 1];

      const Rational denom = j > 0 ? diag - sub * prev_super : diag;
      if (denom.is_zero()) {
        throw std::logic_error("solve_first_step: singular system at level " +
                               std::to_string(level));
      }
      super[j] = sup / denom;
      rhs[j] = j > 0 ? (r - sub * prev_rhs) / denom : r / denom;
      prev_super = super[j];
      prev_rhs = rhs[j];
    }
    Rational next = rhs[len - 1];
    x[last] = next;
    for (std::size_t j = len - 1; j-- > 0;) {
      next = rhs[j] - super[j] * next;
      x[first + static_cast<int>(j)] = next;
    }
  }
  return x;
}

void check_level(const LevelChain& chain, int k, const char* what) {
  if (k < 0 || k > chain.n) {
    throw std::out_of_range(std::string(what) + ": level " + std::to_string(k) +
                            " outside [0.." + std::to_string(chain.n) + "]");
  }
}

}  // namespace

Rational LevelChain::up_at(int k) const {
  return (k >= 0 && k < n) ? up[static_cast<std::size_t>(k)] : Rational(0);
}

Rational LevelChain::down_at(int k) const {
  return (k > 0 && k < n) ? down[static_cast<std::size_t>(k)] : Rational(0);
}

Rational LevelChain::stay_at(int k) const {
  return Rational(1) - up_at(k) - down_at(k);
}

LevelChain build_unitation_chain(const FitnessFunction& f, const Rational& p,
                                 AcceptanceRule elitist_rule) {
  if (p < Rational(0) || p > Rational(1)) {
    throw std::invalid_argument("level chain: p must lie in [0,1]");
  }
  const int n = f.n();
  LevelChain chain;
  chain.n = n;
  chain.m = f.kind() == BenchmarkKind::Jump ? f.gap() : 0;
  chain.p = p;
  chain.up.resize(static_cast<std::size_t>(n));
  chain.down.resize(static_cast<std::size_t>(n));

  // P(accept) = p + (1 - p) [elitist rule accepts].
  auto acceptance = [&](int from, int to) {
    const bool elitist = decide_acceptance(elitist_rule, level_fitness(f, from), level_fitness(f, to));
    return elitist ? Rational(1) : p;
  };
  for (int k = 0; k < n; ++k) {
    chain.up[k] = Rational(n - k, n) * acceptance(k, k + 1);
    chain.down[k] = k > 0 ? Rational(k, n) * acceptance(k, k - 1) : Rational(0);
  }
  return chain;
}

LevelChain build_level_chain(int n, int m, const Rational& p) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw std::invalid_argument("build_level_chain: need 1 <= m <= n-1, got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m));
  }
  return build_unitation_chain(FitnessFunction::jump(n, m), p, AcceptanceRule::OnlyImproving);
}

ExtRational uphill_time_recurrence(const LevelChain& chain, int i) {
  if (i < 0 || i >= chain.n) {
    throw std::out_of_range("uphill_time_recurrence: i outside [0..n-1]");
  }
  Rational total;
  Rational product = 1;  // prod_{l=k+1}^{i} down_l / up_l
  for (int k = i; k >= 0; --k) {
    if (product.is_zero()) break;  // every remaining term carries this factor
    const Rational& up = chain.up[k];
    if (up.is_zero()) return ExtRational::infinite();
    total += product / up;
    product *= chain.down[k] / up;
  }
  return total;
}

ExtRational closed_form_last_uphill(int n, int m, const Rational& p) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw std::invalid_argument("closed_form_last_uphill: need 1 <= m <= n-1");
  }
  if (p < Rational(0) || p > Rational(1)) {
    throw std::invalid_argument("closed_form_last_uphill: p must lie in [0,1]");
  }
  if (p.is_zero()) return ExtRational::infinite();

  Rational ascent;
  for (int k = 0; k <= n - m - 1; ++k) {
    ascent += p.pow(-k) * Rational(binomial(n, k), 1);
  }
  Rational descent;
  for (int k = n - m; k <= n - 1; ++k) {
    descent += Rational(binomial(n, k), 1) * p.pow(k);
  }
  return p.pow(n - 2 * m + 1) * ascent + p.pow(1 - n) * descent;
}

std::vector<ExtRational> hitting_times_linear_solve(const LevelChain& chain) {
  const int n = chain.n;
  std::vector<bool> target(n + 1, false);
  target[n] = true;
  std::vector<Rational> boundary(n + 1);
  const auto solution = solve_first_step(chain, target, boundary, Rational(1));

  std::vector<ExtRational> h;
  h.reserve(solution.size());
  for (const auto& value : solution) {
    h.push_back(value ? ExtRational(*value) : ExtRational::infinite());
  }
  return h;
}

ExtRational expected_runtime(const LevelChain& chain, int start_level) {
  check_level(chain, start_level, "expected_runtime");
  return hitting_times_linear_solve(chain)[start_level];
}

ExtRational expected_runtime_uniform(const LevelChain& chain) {
  const int n = chain.n;
  const auto h = hitting_times_linear_solve(chain);
  Rational total;
  for (int k = 0; k <= n; ++k) {
    if (h[k].is_infinite()) return ExtRational::infinite();
    total += Rational(binomial(n, k), 1) * h[k].value();
  }
  BigInt weight;
  mpz_ui_pow_ui(weight.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return total / Rational(weight, 1);
}

PhaseStatistics phase_statistics(const LevelChain& chain) {
  if (chain.m < 1) {
    throw std::invalid_argument("phase_statistics: chain was not built from a Jump function");
  }
  const int n = chain.n;
  const int local = n - chain.m;

  std::vector<bool> target(n + 1, false);
  target[local] = true;
  target[n] = true;

  std::vector<Rational> zero(n + 1);
  const auto return_time = solve_first_step(chain, target, zero, Rational(1));

  std::vector<Rational> hit_optimum(n + 1);
  hit_optimum[n] = 1;
  const auto absorb_at_optimum = solve_first_step(chain, target, hit_optimum, Rational(0));

  PhaseStatistics stats;
  ExtRational length = Rational(1);
  const Rational up = chain.up_at(local);
  const Rational down = chain.down_at(local);
  if (up.sign() > 0) {
    const auto& after = return_time[local + 1];
    length = after ? length + ExtRational(up * *after) : ExtRational::infinite();
  }
  if (down.sign() > 0) {
    const auto& after = return_time[local - 1];
    length = after ? length + ExtRational(down * *after) : ExtRational::infinite();
  }
  stats.expected_length = length;

  if (up.sign() > 0 && absorb_at_optimum[local + 1]) {
    stats.success_probability = up * *absorb_at_optimum[local + 1];
  }
  stats.expected_phases = stats.success_probability.is_zero()
                              ? ExtRational::infinite()
                              : ExtRational(stats.success_probability.reciprocal());
  return stats;
}

}  // namespace mahh
