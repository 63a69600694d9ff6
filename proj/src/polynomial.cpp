#include "logcert/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace logcert {

namespace {
const Rational kZero{};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (c.is_zero()) return zero();
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = p.coefficient(static_cast<int>(i)) + q.coefficient(static_cast<int>(i));
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial::zero();
  std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (size_t i = 0; i < p.coeffs_.size(); ++i)
    for (size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(a * c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(long shift) const {
  // Horner in (n + shift).
  Polynomial linear({Rational(shift), Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * linear + constant(*it);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("Polynomial: division by the zero polynomial");
  Polynomial rem = p;
  std::vector<Rational> quot;
  int dq = q.degree();
  if (rem.degree() >= dq) quot.resize(static_cast<size_t>(rem.degree() - dq) + 1);
  while (!rem.is_zero() && rem.degree() >= dq) {
    int k = rem.degree() - dq;
    Rational c = rem.leading_coefficient() / q.leading_coefficient();
    quot[static_cast<size_t>(k)] = c;
    rem = rem - q * monomial(c, k);
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& q) const {
  auto [quot, rem] = divmod(*this, q);
  if (!rem.is_zero()) throw std::logic_error("Polynomial: division expected to be exact");
  return quot;
}

Polynomial Polynomial::gcd(Polynomial p, Polynomial q) {
  while (!q.is_zero()) {
    auto [quot, rem] = divmod(p, q);
    (void)quot;
    p = std::move(q);
    q = std::move(rem);
  }
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_coefficient());
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coefficient(i);
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (i == 0 || !unit) out << mag.to_string();
    if (i > 0) {
      if (!unit) out << "*";
      out << "n";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

long eventual_sign_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("eventual_sign_bound: zero polynomial");
  const Rational& lead = p.leading_coefficient();
  Rational max_ratio;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coefficient(i) / lead;
    if (r.sign() < 0) r = -r;
    if (r > max_ratio) max_ratio = r;
  }
  Rational bound = Rational(1) + max_ratio;
  // ceil of an exact rational
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), bound.num().get_mpz_t(), bound.den().get_mpz_t());
  return q.get_si();
}

std::string SignCertificate::summary() const {
  std::ostringstream out;
  switch (verdict) {
    case SignVerdictKind::AllPositive: out << "> 0"; break;
    case SignVerdictKind::AllNonnegative: out << ">= 0"; break;
    case SignVerdictKind::AllNegative: out << "< 0"; break;
    case SignVerdictKind::AllNonpositive: out << "<= 0"; break;
    case SignVerdictKind::Fails:
      out << "fails at n=" << witness << " (value " << polynomial.eval(witness).to_string()
          << ")";
      return out.str();
  }
  out << " for all n >= " << threshold << " (scanned to " << scan_bound
      << ", tail by leading coefficient)";
  return out.str();
}

SignCertificate sign_for_all_n_geq(const Polynomial& p, long threshold, Strictness strictness) {
  SignCertificate cert;
  cert.polynomial = p;
  cert.threshold = threshold;
  int lead_sign = p.leading_coefficient().sign();
  if (lead_sign == 0) throw std::domain_error("sign_for_all_n_geq: zero polynomial");
  cert.scan_bound = std::max(threshold, eventual_sign_bound(p));
  for (long n = threshold; n <= cert.scan_bound; ++n) {
    int s = p.eval(n).sign();
    bool ok = (strictness == Strictness::Strict) ? (s == lead_sign) : (s == lead_sign || s == 0);
    if (!ok) {
      cert.verdict = SignVerdictKind::Fails;
      cert.witness = n;
      cert.justification = SignCertificate::Justification::ExhaustiveScan;
      return cert;
    }
  }
  if (lead_sign > 0)
    cert.verdict = (strictness == Strictness::Strict) ? SignVerdictKind::AllPositive
                                                      : SignVerdictKind::AllNonnegative;
  else
    cert.verdict = (strictness == Strictness::Strict) ? SignVerdictKind::AllNegative
                                                      : SignVerdictKind::AllNonpositive;
  cert.justification = SignCertificate::Justification::LeadingCoefficientTail;
  return cert;
}

IntervalPosition quadratic_root_interval_position(const Polynomial& a, const Polynomial& b,
                                                  const Polynomial& c, long n,
                                                  const Rational& q) {
  Rational an = a.eval(n);
  if (an.sign() <= 0)
    throw std::domain_error("quadratic_root_interval_position: a(" + std::to_string(n) +
                            ") = " + an.to_string() + " is not positive");
  Rational bn = b.eval(n);
  Rational cn = c.eval(n);
  Rational disc = bn * bn - Rational(4) * an * cn;
  if (disc.sign() < 0)
    throw std::domain_error("quadratic_root_interval_position: discriminant at n=" +
                            std::to_string(n) + " is " + disc.to_string() + " < 0");
  Rational value = an * q * q + bn * q + cn;
  if (value.sign() < 0) return IntervalPosition::Inside;
  if (value.sign() == 0) return IntervalPosition::OnBoundary;
  return IntervalPosition::Outside;
}

std::optional<std::pair<Rational, Rational>> quadratic_rational_roots(const Rational& a2,
                                                                      const Rational& a1,
                                                                      const Rational& a0) {
  if (a2.is_zero()) throw std::domain_error("quadratic_rational_roots: leading coefficient zero");
  Rational disc = a1 * a1 - Rational(4) * a2 * a0;
  if (disc.sign() < 0) return std::nullopt;
  // sqrt(p/q) is rational iff p and q are both perfect squares (reduced form).
  if (mpz_perfect_square_p(disc.num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(disc.den().get_mpz_t()) == 0)
    return std::nullopt;
  Integer sp, sq;
  mpz_sqrt(sp.get_mpz_t(), disc.num().get_mpz_t());
  mpz_sqrt(sq.get_mpz_t(), disc.den().get_mpz_t());
  Rational root(sp, sq);
  Rational r1 = (-a1 - root) / (Rational(2) * a2);
  Rational r2 = (-a1 + root) / (Rational(2) * a2);
  if (r2 < r1) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

}  // namespace logcert
