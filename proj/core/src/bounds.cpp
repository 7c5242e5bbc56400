#include "mahh/bounds.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mahh {
namespace {

constexpr double kE = 2.718281828459045;

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// ln(k^m - (k-1)^m) without forming either power.
double log_surjections(int m, int k) {
  if (k == 1) return 0.0;
  const double ratio_pow = std::exp(m * std::log1p(-1.0 / k));
  return m * std::log(static_cast<double>(k)) + std::log1p(-ratio_pow);
}

void check_global(int n, int m, double p, int k) {
  if (n < 2 || m < 1 || m > n) {
    throw std::invalid_argument("global bound: need n >= 2 and 1 <= m <= n");
  }
  if (k < 1 || k > m) {
    throw std::invalid_argument("global bound: k must lie in [1..m]");
  }
  if (!(p > 0.0 && p <= 1.0 - 1.0 / n)) {
    throw std::invalid_argument("global bound: p must lie in (0, 1 - 1/n]");
  }
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                    std::chars_format::general, 15);
  return std::string(buffer, result.ptr);
}

}  // namespace

LogReal LogReal::from_value(double value) {
  if (!(value > 0.0)) throw std::invalid_argument("LogReal: value must be positive");
  return LogReal(std::log(value));
}

LogReal LogReal::infinite() { return LogReal(std::numeric_limits<double>::infinity()); }

double LogReal::log10() const noexcept { return log_ / std::log(10.0); }

double LogReal::value() const noexcept { return std::exp(log_); }

bool LogReal::is_infinite() const noexcept { return std::isinf(log_) && log_ > 0; }

std::string LogReal::to_string() const {
  if (is_infinite()) return "inf";
  const double v = value();
  if (std::isfinite(v) && v > 0.0) return format_double(v);
  const double l10 = log10();
  double exponent = std::floor(l10);
  const double mantissa = std::pow(10.0, l10 - exponent);
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, mantissa,
                                    std::chars_format::fixed, 12);
  return std::string(buffer, result.ptr) + "e" + (exponent >= 0 ? "+" : "") +
         std::to_string(static_cast<long long>(exponent));
}

BigInt onebit_lower_bound_term(int n, int m) {
  if (m < 2 || n - 2 * m + 1 < 0) {
    throw std::invalid_argument("onebit_lower_bound_term: need m >= 2 and 2m-1 <= n");
  }
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(2 * m - 1));
}

LogReal onebit_upper_bound_expr(int n, int m) {
  if (m < 2 || 2 * m > n) {
    throw std::invalid_argument("onebit_upper_bound_expr: need 2 <= m <= n/2");
  }
  return LogReal::from_log((2 * m - 1) * std::log(static_cast<double>(n)) -
                           std::lgamma(m + 1.0) - (m - 2) * std::log(static_cast<double>(m)));
}

LogReal onebit_phase_count_bound(int n, int m) {
  if (m < 2 || 2 * m > n) {
    throw std::invalid_argument("onebit_phase_count_bound: need 2 <= m <= n/2");
  }
  return LogReal::from_log((2 * m - 1) * std::log(static_cast<double>(n)) -
                           std::lgamma(m + 1.0) - (m - 1) * std::log(static_cast<double>(m)));
}

BigInt surjection_count(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("surjection_count: need m, k >= 1");
  BigInt all, without_first;
  mpz_ui_pow_ui(all.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
  mpz_ui_pow_ui(without_first.get_mpz_t(), static_cast<unsigned long>(k - 1),
                static_cast<unsigned long>(m));
  return all - without_first;
}

LogReal global_phase_success_lb(int n, int m, double p, int k) {
  check_global(n, m, p, k);
  return LogReal::from_log((k - 1) * std::log(p) - k + log_surjections(m, k) -
                           m * std::log(static_cast<double>(n)));
}

LogReal global_runtime_bound(int n, int m, double p, int k) {
  return global_phase_success_lb(n, m, p, k).reciprocal();
}

LogReal global_runtime_bound_simplified(int n, int m, double p, int k) {
  check_global(n, m, p, k);
  return LogReal::from_log((k + 1) - std::log(kE - 1.0) - (k - 1) * std::log(p) -
                           m * std::log(static_cast<double>(k)) +
                           m * std::log(static_cast<double>(n)));
}

int global_optimal_k(int m, double p) {
  if (m < 1) throw std::invalid_argument("global_optimal_k: need m >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("global_optimal_k: need 0 < p < 1");
  const double k = std::ceil(m / (1.0 - std::log(p)));
  if (k < 1.0) return 1;
  if (k > m) return m;
  return static_cast<int>(k);
}

int global_argmin_k(int n, int m, double p) {
  int best = 1;
  LogReal best_value = global_runtime_bound(n, m, p, 1);
  for (int k = 2; k <= m; ++k) {
    const LogReal value = global_runtime_bound(n, m, p, k);
    if (value < best_value) {
      best = k;
      best_value = value;
    }
  }
  return best;
}

const BoundEntry* BoundReport::find(std::string_view id) const {
  for (const auto& entry : entries) {
    if (entry.id == id) return &entry;
  }
  return nullptr;
}

BoundReport make_bound_report(int n, int m, double p) {
  if (n < 2 || m < 1 || m > n) {
    throw std::invalid_argument("bound report: need n >= 2 and 1 <= m <= n");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bound report: p must lie in [0,1]");
  }
  BoundReport report;
  report.n = n;
  report.m = m;
  report.p = p;

  if (m >= 2 && 2 * m - 1 <= n) {
    BoundEntry entry{"onebit_lower_bound_term",
                     LogReal::from_log(log_binomial(n, 2 * m - 1)), false, std::nullopt};
    if (entry.value.log10() < 60) entry.exact = onebit_lower_bound_term(n, m).get_str();
    report.entries.push_back(std::move(entry));
  }
  if (m >= 2 && 2 * m <= n) {
    report.entries.push_back({"onebit_upper_bound_expr", onebit_upper_bound_expr(n, m), true, std::nullopt});
    report.entries.push_back({"onebit_phase_count_bound", onebit_phase_count_bound(n, m), false, std::nullopt});
  }
  if (p > 0.0 && p < 1.0 && p <= 1.0 - 1.0 / n) {
    const int k = global_optimal_k(m, p);
    const int best = global_argmin_k(n, m, p);
    report.optimal_k = k;
    report.argmin_k = best;
    report.entries.push_back({"global_phase_success_lb", global_phase_success_lb(n, m, p, k), false, std::nullopt});
    report.entries.push_back({"global_runtime_bound", global_runtime_bound(n, m, p, k), false, std::nullopt});
    report.entries.push_back({"global_runtime_bound_simplified",
                              global_runtime_bound_simplified(n, m, p, k), false, std::nullopt});
    report.entries.push_back({"global_runtime_bound_argmin", global_runtime_bound(n, m, p, best), false, std::nullopt});
    report.entries.push_back({"global_runtime_bound_k1", global_runtime_bound(n, m, p, 1), false, std::nullopt});
  }
  return report;
}

}  // namespace mahh
