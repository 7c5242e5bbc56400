#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mahh/rational.hpp"

namespace mahh {

/// Positive real (or +infinity) held as its natural logarithm so that
/// expressions like n^{2m-1} stay representable for n up to 10^6.
class LogReal {
 public:
  static LogReal from_log(double log_value) { return LogReal(log_value); }
  /// Requires value > 0.
  static LogReal from_value(double value);
  static LogReal infinite();

  double log() const noexcept { return log_; }
  double log10() const noexcept;
  /// exp(log); +inf when it overflows a double.
  double value() const noexcept;
  bool is_infinite() const noexcept;

  LogReal reciprocal() const { return LogReal(-log_); }

  /// 15 significant digits; scientific notation with a decimal exponent
  /// computed in the log domain when the value leaves double range.
  std::string to_string() const;

  friend LogReal operator*(LogReal a, LogReal b) { return LogReal(a.log_ + b.log_); }
  friend LogReal operator/(LogReal a, LogReal b) { return LogReal(a.log_ - b.log_); }
  friend bool operator==(LogReal a, LogReal b) { return a.log_ == b.log_; }
  friend auto operator<=>(LogReal a, LogReal b) { return a.log_ <=> b.log_; }

 private:
  explicit LogReal(double log_value) : log_(log_value) {}
  double log_;
};

/// C(n, 2m-1): the single ascent term kept by the one-bit lower bound.
/// Requires m >= 2 and n - 2m + 1 >= 0.
BigInt onebit_lower_bound_term(int n, int m);

/// n^{2m-1} / (m! m^{m-2}), the one-bit upper-bound expression with its
/// hidden constant taken as 1. Requires 2 <= m <= n/2.
LogReal onebit_upper_bound_expr(int n, int m);

/// n^{2m-1} / (m! m^{m-1}): bound on the expected number of phases of the
/// one-bit MAHH for p >= m/n. Requires 2 <= m <= n/2.
LogReal onebit_phase_count_bound(int n, int m);

/// k^m - (k-1)^m: partitions of an m-set into k labelled parts with the
/// first part nonempty.
BigInt surjection_count(int m, int k);

/// p^{k-1} e^{-k} (k^m - (k-1)^m) n^{-m}: lower bound on the probability that
/// a global-mutation phase ends in the optimum. Requires 1 <= k <= m and
/// 0 < p <= 1 - 1/n.
LogReal global_phase_success_lb(int n, int m, double p, int k);

/// e^k n^m / (p^{k-1} (k^m - (k-1)^m)), the reciprocal of the success
/// bound, i.e. the bound on E[N].
LogReal global_runtime_bound(int n, int m, double p, int k);

/// e^{k+1} n^m / ((e-1) p^{k-1} k^m), never below global_runtime_bound.
LogReal global_runtime_bound_simplified(int n, int m, double p, int k);

/// min(m, max(1, ceil(m / ln(e/p)))). Requires 0 < p < 1.
int global_optimal_k(int m, double p);

/// argmin over k in [1..m] of global_runtime_bound (smallest k on ties).
int global_argmin_k(int n, int m, double p);

struct BoundEntry {
  std::string id;
  LogReal value;
  /// The expression sits inside an O(.) and carries an unknown constant.
  bool up_to_constants = false;
  /// Exact integer rendering when the bound is an integer of moderate size.
  std::optional<std::string> exact;
};

struct BoundReport {
  int n = 0;
  int m = 0;
  double p = 0.0;
  std::optional<int> optimal_k;
  std::optional<int> argmin_k;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(std::string_view id) const;
};

/// Every bound whose preconditions hold for (n, m, p).
BoundReport make_bound_report(int n, int m, double p);

}  // namespace mahh
