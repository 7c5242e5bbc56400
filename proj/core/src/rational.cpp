#include "mahh/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace mahh {
namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational::Rational(long long value) : q_(BigInt(static_cast<long>(value))) {}

Rational::Rational(long long numerator, long long denominator)
    : Rational(BigInt(static_cast<long>(numerator)), BigInt(static_cast<long>(denominator))) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse(s.substr(0, slash));
    const Rational den = parse(s.substr(slash + 1));
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    return num / den;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_literal(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_literal(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_literal(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text);

  const std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  BigInt den = 1;
  if (exponent > 0) {
    num *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    den = pow10(static_cast<unsigned long>(-exponent));
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const { return q_.get_str(); }

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  const BigInt scale = pow10(static_cast<unsigned long>(digits));
  BigInt num = abs(q_.get_num()) * scale;
  const BigInt& den = q_.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  BigInt scaled = (2 * num + den) / (2 * den);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  if (sign() < 0 && body != "0") body.insert(0, "-");
  return body;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::domain_error("ExtRational: value of Infinite");
  return value_;
}

double ExtRational::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
}

std::string ExtRational::to_string() const {
  return infinite_ ? "inf" : value_.to_string();
}

std::string ExtRational::to_decimal(int digits) const {
  return infinite_ ? "inf" : value_.to_decimal(digits);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return ExtRational::infinite();
  return ExtRational(a.value_ + b.value_);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return a.value_ <=> b.value_;
}

}  // namespace mahh
