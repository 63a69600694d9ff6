#include "logcert/rational_function.hpp"

#include <sstream>

namespace logcert {

namespace {

// Scalar multiple turning p into a primitive integer polynomial with
// positive leading coefficient.
Rational canonical_scale(const Polynomial& p) {
  Integer lcm_den(1);
  for (const auto& c : p.coefficients())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  Integer content(0);
  for (const auto& c : p.coefficients()) {
    Integer scaled_num = c.num() * (lcm_den / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled_num.get_mpz_t());
  }
  if (content == 0) content = 1;
  Rational scale{lcm_den, content};
  if ((p.leading_coefficient() * scale).sign() < 0) scale = -scale;
  return scale;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational scale = canonical_scale(den_);
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero())
    throw std::domain_error("RationalFunction: pole at " + x.to_string());
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return f + (-g);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw std::domain_error("RationalFunction: division by the zero function");
  return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

RationalFunction RationalFunction::shifted(long shift) const {
  return RationalFunction(num_.shifted(shift), den_.shifted(shift));
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::constant(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::string RationalSignCertificate::summary() const {
  std::ostringstream out;
  switch (verdict) {
    case SignVerdictKind::AllPositive: out << "> 0"; break;
    case SignVerdictKind::AllNonnegative: out << ">= 0"; break;
    case SignVerdictKind::AllNegative: out << "< 0"; break;
    case SignVerdictKind::AllNonpositive: out << "<= 0"; break;
    case SignVerdictKind::Fails: out << "fails at n=" << witness; return out.str();
  }
  out << " for all n >= " << threshold << " (scanned to " << scan_bound
      << ", tail by leading coefficients)";
  return out.str();
}

RationalSignCertificate sign_for_all_n_geq(const RationalFunction& f, long threshold,
                                           Strictness strictness) {
  RationalSignCertificate cert;
  cert.threshold = threshold;
  if (f.is_zero()) throw std::domain_error("sign_for_all_n_geq: zero function");
  int tail_sign = f.num().leading_coefficient().sign() * f.den().leading_coefficient().sign();
  cert.scan_bound =
      std::max({threshold, eventual_sign_bound(f.num()), eventual_sign_bound(f.den())});
  for (long n = threshold; n <= cert.scan_bound; ++n) {
    if (!f.defined_at(n)) {
      cert.verdict = SignVerdictKind::Fails;
      cert.witness = n;
      return cert;
    }
    int s = f.eval(n).sign();
    bool ok = (strictness == Strictness::Strict) ? (s == tail_sign) : (s == tail_sign || s == 0);
    if (!ok) {
      cert.verdict = SignVerdictKind::Fails;
      cert.witness = n;
      return cert;
    }
  }
  if (tail_sign > 0)
    cert.verdict = (strictness == Strictness::Strict) ? SignVerdictKind::AllPositive
                                                      : SignVerdictKind::AllNonnegative;
  else
    cert.verdict = (strictness == Strictness::Strict) ? SignVerdictKind::AllNegative
                                                      : SignVerdictKind::AllNonpositive;
  return cert;
}

}  // namespace logcert
