#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace mahh {

using BigInt = mpz_class;

BigInt binomial(unsigned long n, unsigned long k);

/// Exact rational in lowest terms, denominator > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "3", "-1/2", "2/30", "0.25", "1e-3", "2.5E2". Decimal input is
  /// converted exactly ("0.1" is 1/10).
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// "41/2", or "26" for integers.
  std::string to_string() const;
  /// Decimal rounded half away from zero to at most `digits` fractional
  /// digits, trailing zeros removed: 41/2 -> "20.5", 1/3 -> "0.333333".
  std::string to_decimal(int digits = 6) const;

  /// Integer power; negative exponents invert (throws for 0).
  Rational pow(long exponent) const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

/// A nonnegative-or-finite rational, or the Infinite sentinel used for
/// expected times of unreachable targets.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  static ExtRational infinite() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Throws std::domain_error for Infinite.
  const Rational& value() const;
  double to_double() const;

  /// "inf" or Rational::to_string().
  std::string to_string() const;
  std::string to_decimal(int digits = 6) const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  Rational value_;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.to_string(); }
inline std::ostream& operator<<(std::ostream& out, const ExtRational& r) { return out << r.to_string(); }

}  // namespace mahh
