#pragma once

#include <string>

#include "logcert/polynomial.hpp"

namespace logcert {

/// Quotient of two polynomials in canonical form: numerator and denominator
/// coprime, denominator an integer-coefficient primitive polynomial with
/// positive leading coefficient. The canonical form is unique, so equality
/// is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Polynomial& p)
      : RationalFunction(p, Polynomial::constant(Rational(1))) {}
  static RationalFunction constant(const Rational& c) {
    return RationalFunction(Polynomial::constant(c));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at x; throws std::domain_error on a pole.
  Rational eval(const Rational& x) const;
  Rational eval(long n) const { return eval(Rational(n)); }
  bool defined_at(long n) const { return !den_.eval(n).is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  RationalFunction shifted(long shift) const;

  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) {
    return !(f == g);
  }

  std::string to_string() const;

 private:
  Polynomial num_, den_;
};

/// Sign certificate for a rational function on integers >= threshold: exact
/// evaluation through the Cauchy bounds of both numerator and denominator,
/// leading-coefficient tail beyond. A pole inside the range is a failure.
struct RationalSignCertificate {
  long threshold = 0;
  SignVerdictKind verdict = SignVerdictKind::Fails;
  long witness = 0;
  long scan_bound = 0;
  bool blanket() const { return verdict != SignVerdictKind::Fails; }
  std::string summary() const;
};

RationalSignCertificate sign_for_all_n_geq(const RationalFunction& f, long threshold,
                                           Strictness strictness);

}  // namespace logcert
