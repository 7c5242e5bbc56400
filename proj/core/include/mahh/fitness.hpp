#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "mahh/bit_string.hpp"

namespace mahh {

/// Objective value stored as twice the fitness, so Cliff's half-integer
/// penalty compares exactly.
class Fitness {
 public:
  constexpr Fitness() = default;
  static constexpr Fitness from_doubled(std::int64_t doubled) {
    Fitness f;
    f.doubled_ = doubled;
    return f;
  }
  static constexpr Fitness from_integer(std::int64_t value) {
    return from_doubled(2 * value);
  }

  constexpr std::int64_t doubled() const noexcept { return doubled_; }
  constexpr double value() const noexcept {
    return static_cast<double>(doubled_) / 2.0;
  }
  /// "8", "3.5", "-0.5".
  std::string to_string() const;

  friend constexpr auto operator<=>(Fitness, Fitness) = default;

 private:
  std::int64_t doubled_ = 0;
};

enum class BenchmarkKind { OneMax, Jump, Cliff };

/// OneMax, Jump_m or Cliff_d on {0,1}^n. All three depend only on the
/// number of one-bits, and all have the all-ones string as unique optimum.
class FitnessFunction {
 public:
  static FitnessFunction onemax(int n);
  static FitnessFunction jump(int n, int m);
  static FitnessFunction cliff(int n, int d);

  BenchmarkKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  /// m for Jump, d for Cliff, empty for OneMax.
  std::optional<int> param() const noexcept { return param_; }
  /// Jump gap width; throws for other kinds.
  int gap() const;

  std::string name() const;

 private:
  FitnessFunction(BenchmarkKind kind, int n, std::optional<int> param);

  BenchmarkKind kind_;
  int n_;
  std::optional<int> param_;
};

Fitness level_fitness(const FitnessFunction& f, int level);
Fitness evaluate(const FitnessFunction& f, const BitString& x);
Fitness global_maximum(const FitnessFunction& f);

// Potential d and target set X* for Jump. The level-based overloads are
// valid because both quantities depend only on the one-count (level n is
// the global optimum).
int potential_d(const FitnessFunction& f, const BitString& x);
int potential_d_at_level(const FitnessFunction& f, int level);
bool in_target_set(const FitnessFunction& f, const BitString& x);
bool in_target_set_at_level(const FitnessFunction& f, int level);

}  // namespace mahh
