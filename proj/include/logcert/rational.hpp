#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace logcert {

using Integer = mpz_class;

enum class Ordering { Less, Equal, Greater };

/// Arbitrary-precision rational kept in canonical form at all times:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1. Equality is
/// therefore structural.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long v) : value_(v) {}  // NOLINT: implicit by design
  Rational(const Integer& v) : value_(v) {}
  Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p/q" or "p" (decimal-free). Throws std::invalid_argument.
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.value_ = std::move(q);
    return r;
  }

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const { return value_.get_str(); }

  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

inline Ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return Ordering::Less;
  if (a == b) return Ordering::Equal;
  return Ordering::Greater;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace logcert
