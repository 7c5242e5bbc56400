#include "mahh/search.hpp"

#include <charconv>
#include <stdexcept>

namespace mahh {
namespace {

// In-place mutation helpers; they consume exactly the same draws as the
// value-returning operators.
int flip_one_bit(BitString& x, Rng& rng) {
  x.flip(uniform_index(rng, x.size()));
  return 1;
}

int flip_bitwise(BitString& x, double rate, Rng& rng, std::vector<std::size_t>& flipped) {
  flipped.clear();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (uniform01(rng) < rate) {
      x.flip(i);
      flipped.push_back(i);
    }
  }
  return static_cast<int>(flipped.size());
}

}  // namespace

std::string_view to_string(AcceptanceRule rule) {
  switch (rule) {
    case AcceptanceRule::AllMoves:
      return "AllMoves";
    case AcceptanceRule::OnlyImproving:
      return "OnlyImproving";
    case AcceptanceRule::ImprovingAndEqual:
      return "ImprovingAndEqual";
  }
  return "?";
}

void AlgorithmConfig::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("algorithm config: p must lie in [0,1]");
  }
  if (elitist_rule == AcceptanceRule::AllMoves) {
    throw std::invalid_argument("algorithm config: elitist rule cannot be AllMoves");
  }
  if (mutation.kind == MutationKind::Bitwise && !(mutation.rate > 0.0 && mutation.rate <= 1.0)) {
    throw std::invalid_argument("algorithm config: bitwise rate must lie in (0,1]");
  }
}

AlgorithmConfig baseline_config(std::string_view name, int n, double p) {
  if (n < 1) throw std::invalid_argument("baseline_config: n must be >= 1");
  const double rate = 1.0 / n;
  AlgorithmConfig cfg;
  cfg.name = std::string(name);
  if (name == "mahh-onebit") {
    cfg.mutation = MutationOperator::one_bit();
    cfg.p = p;
    cfg.elitist_rule = AcceptanceRule::OnlyImproving;
  } else if (name == "mahh-global") {
    cfg.mutation = MutationOperator::bitwise(rate);
    cfg.p = p;
    cfg.elitist_rule = AcceptanceRule::OnlyImproving;
  } else if (name == "opo-ea") {
    cfg.mutation = MutationOperator::bitwise(rate);
    cfg.p = 0.0;
    cfg.elitist_rule = AcceptanceRule::ImprovingAndEqual;
  } else if (name == "rls") {
    cfg.mutation = MutationOperator::one_bit();
    cfg.p = 0.0;
    cfg.elitist_rule = AcceptanceRule::ImprovingAndEqual;
  } else {
    throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                "' (expected mahh-onebit, mahh-global, opo-ea or rls)");
  }
  cfg.validate();
  return cfg;
}

SearchState SearchState::start(const FitnessFunction& f, BitString x) {
  const Fitness fitness = evaluate(f, x);
  return SearchState{std::move(x), fitness, 0};
}

BitString mutate_one_bit(const BitString& x, Rng& rng) {
  BitString y = x;
  flip_one_bit(y, rng);
  return y;
}

BitString mutate_bitwise(const BitString& x, double rate, Rng& rng) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("mutate_bitwise: rate must lie in (0,1]");
  }
  BitString y = x;
  std::vector<std::size_t> flipped;
  flip_bitwise(y, rate, rng, flipped);
  return y;
}

bool decide_acceptance(AcceptanceRule rule, Fitness current, Fitness candidate) {
  switch (rule) {
    case AcceptanceRule::AllMoves:
      return true;
    case AcceptanceRule::OnlyImproving:
      return candidate > current;
    case AcceptanceRule::ImprovingAndEqual:
      return candidate >= current;
  }
  return false;
}

StepEvent step(SearchState& state, const AlgorithmConfig& cfg,
               const FitnessFunction& f, Rng& rng) {
  StepEvent event;
  event.level_before = state.level();

  // Mutate in place and undo on rejection.
  thread_local std::vector<std::size_t> flipped;
  std::size_t one_bit_position = 0;
  if (cfg.mutation.kind == MutationKind::OneBit) {
    one_bit_position = uniform_index(rng, state.x.size());
    state.x.flip(one_bit_position);
    event.flipped = 1;
  } else {
    event.flipped = flip_bitwise(state.x, cfg.mutation.rate, rng, flipped);
  }

  event.rule_used = uniform01(rng) < cfg.p ? AcceptanceRule::AllMoves : cfg.elitist_rule;
  const Fitness candidate = evaluate(f, state.x);
  event.accepted = decide_acceptance(event.rule_used, state.fitness, candidate);

  if (event.accepted) {
    state.fitness = candidate;
  } else if (cfg.mutation.kind == MutationKind::OneBit) {
    state.x.flip(one_bit_position);
  } else {
    for (std::size_t i : flipped) state.x.flip(i);
  }
  ++state.step_count;
  event.level_after = state.level();
  return event;
}

StartPolicy parse_start_policy(std::string_view text) {
  if (text == "uniform-random" || text == "uniform") return UniformStart{};
  if (text == "local-optimum") return LocalOptimumStart{};
  if (text.starts_with("level=")) {
    const std::string_view digits = text.substr(6);
    int level = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || level < 0) {
      throw std::invalid_argument("start policy: bad level in '" + std::string(text) + "'");
    }
    return LevelStart{level};
  }
  if (!text.empty() && text.find_first_not_of("01") == std::string_view::npos) {
    return BitString::parse(text);
  }
  throw std::invalid_argument("start policy: expected uniform-random, level=K, "
                              "local-optimum or a 0/1 string, got '" +
                              std::string(text) + "'");
}

std::string to_string(const StartPolicy& start) {
  struct Visitor {
    std::string operator()(const UniformStart&) const { return "uniform-random"; }
    std::string operator()(const LevelStart& s) const { return "level=" + std::to_string(s.level); }
    std::string operator()(const LocalOptimumStart&) const { return "local-optimum"; }
    std::string operator()(const BitString& x) const { return x.to_string(); }
  };
  return std::visit(Visitor{}, start);
}

BitString draw_start(const StartPolicy& start, const FitnessFunction& f, Rng& rng) {
  const auto n = static_cast<std::size_t>(f.n());
  struct Visitor {
    const FitnessFunction& f;
    std::size_t n;
    Rng& rng;
    BitString operator()(const UniformStart&) const { return BitString::uniform(n, rng); }
    BitString operator()(const LevelStart& s) const {
      if (s.level < 0 || static_cast<std::size_t>(s.level) > n) {
        throw std::invalid_argument("start policy: level outside [0..n]");
      }
      return BitString::with_level(n, static_cast<std::size_t>(s.level), rng);
    }
    BitString operator()(const LocalOptimumStart&) const {
      return BitString::with_level(n, n - static_cast<std::size_t>(f.gap()), rng);
    }
    BitString operator()(const BitString& x) const {
      if (x.size() != n) throw std::invalid_argument("start policy: dimension mismatch");
      return x;
    }
  };
  return std::visit(Visitor{f, n, rng}, start);
}

TrajectorySummary run_trial_raw(const AlgorithmConfig& cfg, const FitnessFunction& f,
                                const StartPolicy& start, std::uint64_t seed,
                                std::uint64_t cap, bool record_levels,
                                const StepObserver& observer) {
  if (cap < 1) throw std::invalid_argument("run_trial_raw: cap must be >= 1");
  cfg.validate();

  Rng rng(seed);
  SearchState state = SearchState::start(f, draw_start(start, f, rng));
  const Fitness target = global_maximum(f);

  TrajectorySummary summary;
  summary.start_level = state.level();
  if (record_levels) summary.levels.push_back(state.level());

  while (state.fitness != target && state.step_count < cap) {
    const StepEvent event = step(state, cfg, f, rng);
    if (record_levels) summary.levels.push_back(event.level_after);
    if (observer) observer(event);
  }

  summary.final_level = state.level();
  summary.steps = state.step_count;
  summary.hit_optimum = state.fitness == target;
  summary.censored = !summary.hit_optimum;
  return summary;
}

}  // namespace mahh
