#include "mahh/fitness.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mahh {

std::string Fitness::to_string() const {
  std::string out = std::to_string(doubled_ / 2);
  if (doubled_ % 2 != 0) {
    if (doubled_ < 0 && doubled_ / 2 == 0) out = "-0";
    out += ".5";
  }
  return out;
}

FitnessFunction::FitnessFunction(BenchmarkKind kind, int n,
                                 std::optional<int> param)
    : kind_(kind), n_(n), param_(param) {
  if (n < 1) {
    throw std::invalid_argument("fitness function: n must be >= 1");
  }
  if (param && (*param < 1 || *param > n)) {
    throw std::invalid_argument("fitness function: parameter must lie in [1..n]");
  }
}

FitnessFunction FitnessFunction::onemax(int n) {
  return FitnessFunction(BenchmarkKind::OneMax, n, std::nullopt);
}

FitnessFunction FitnessFunction::jump(int n, int m) {
  return FitnessFunction(BenchmarkKind::Jump, n, m);
}

FitnessFunction FitnessFunction::cliff(int n, int d) {
  return FitnessFunction(BenchmarkKind::Cliff, n, d);
}

int FitnessFunction::gap() const {
  if (kind_ != BenchmarkKind::Jump) {
    throw std::invalid_argument("expected a Jump function, got " + name());
  }
  return *param_;
}

std::string FitnessFunction::name() const {
  switch (kind_) {
    case BenchmarkKind::OneMax:
      return "onemax(n=" + std::to_string(n_) + ")";
    case BenchmarkKind::Jump:
      return "jump(n=" + std::to_string(n_) + ",m=" + std::to_string(*param_) + ")";
    case BenchmarkKind::Cliff:
      return "cliff(n=" + std::to_string(n_) + ",d=" + std::to_string(*param_) + ")";
  }
  return "unknown";
}

Fitness level_fitness(const FitnessFunction& f, int level) {
  const int n = f.n();
  if (level < 0 || level > n) {
    throw std::out_of_range("level_fitness: level " + std::to_string(level) +
                            " outside [0.." + std::to_string(n) + "]");
  }
  switch (f.kind()) {
    case BenchmarkKind::OneMax:
      return Fitness::from_integer(level);
    case BenchmarkKind::Jump: {
      const int m = *f.param();
      if (level <= n - m || level == n) return Fitness::from_integer(m + level);
      return Fitness::from_integer(n - level);
    }
    case BenchmarkKind::Cliff: {
      const int d = *f.param();
      if (level <= n - d) return Fitness::from_integer(level);
      return Fitness::from_doubled(2 * (level - d) + 1);
    }
  }
  throw std::logic_error("level_fitness: unknown benchmark kind");
}

Fitness evaluate(const FitnessFunction& f, const BitString& x) {
  if (static_cast<int>(x.size()) != f.n()) {
    throw std::invalid_argument("evaluate: bit string has length " +
                                std::to_string(x.size()) + ", function expects " +
                                std::to_string(f.n()));
  }
  return level_fitness(f, static_cast<int>(x.one_count()));
}

Fitness global_maximum(const FitnessFunction& f) {
  return level_fitness(f, f.n());
}

int potential_d_at_level(const FitnessFunction& f, int level) {
  const int m = f.gap();
  const int n = f.n();
  if (level < 0 || level > n) {
    throw std::out_of_range("potential_d: level outside [0..n]");
  }
  if (level == n) return 0;
  return std::abs(n - m - level);
}

int potential_d(const FitnessFunction& f, const BitString& x) {
  if (static_cast<int>(x.size()) != f.n()) {
    throw std::invalid_argument("potential_d: dimension mismatch");
  }
  return potential_d_at_level(f, static_cast<int>(x.one_count()));
}

bool in_target_set_at_level(const FitnessFunction& f, int level) {
  const int m = f.gap();
  return level == f.n() - m || level == f.n();
}

bool in_target_set(const FitnessFunction& f, const BitString& x) {
  if (static_cast<int>(x.size()) != f.n()) {
    throw std::invalid_argument("in_target_set: dimension mismatch");
  }
  return in_target_set_at_level(f, static_cast<int>(x.one_count()));
}

}  // namespace mahh
