#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcert/rational.hpp"

namespace logcert {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first and trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient list and equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// The monomial c * n^k.
  static Polynomial monomial(const Rational& c, int k);
  /// Convenience for integer-coefficient polynomials, lowest degree first.
  static Polynomial from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(int i) const;  // 0 beyond the degree
  const Rational& leading_coefficient() const;

  Rational eval(const Rational& x) const;
  Rational eval(long n) const { return eval(Rational(n)); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial scaled(const Rational& c) const;
  /// P(n + shift) for an integer shift.
  Polynomial shifted(long shift) const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  /// Quotient and remainder of division by a nonzero polynomial.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);
  /// Division known to be exact; throws std::logic_error on a nonzero remainder.
  Polynomial exact_div(const Polynomial& q) const;
  /// Monic greatest common divisor (1 for coprime inputs).
  static Polynomial gcd(Polynomial p, Polynomial q);

  /// Human-readable form, e.g. "16384*n^8 + 81920*n^7 - 84*n + 441".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Smallest N0 >= 0 with sign(P(n)) = sign(leading coefficient) for every
/// integer n >= N0, computed as ceil(1 + max_i |a_i / a_d|) over the
/// non-leading coefficients (a Cauchy root bound). Throws on the zero
/// polynomial.
long eventual_sign_bound(const Polynomial& p);

enum class Strictness { Strict, Weak };

enum class SignVerdictKind { AllPositive, AllNonnegative, AllNegative, AllNonpositive, Fails };

/// Certificate that a polynomial keeps one sign on all integers >= threshold:
/// every integer in [threshold, scan_bound] was evaluated exactly, and
/// scan_bound dominates the Cauchy root bound, so beyond it the sign is the
/// leading coefficient's.
struct SignCertificate {
  Polynomial polynomial;
  long threshold = 0;
  SignVerdictKind verdict = SignVerdictKind::Fails;
  long witness = 0;  // smallest counterexample when verdict == Fails
  long scan_bound = 0;
  enum class Justification { LeadingCoefficientTail, ExhaustiveScan } justification =
      Justification::ExhaustiveScan;

  bool blanket() const { return verdict != SignVerdictKind::Fails; }
  std::string summary() const;
};

/// Decides sign(P(n)) for all integers n >= threshold. Strict requires the
/// leading coefficient's sign everywhere; Weak also admits zeros.
SignCertificate sign_for_all_n_geq(const Polynomial& p, long threshold, Strictness strictness);

enum class IntervalPosition { Inside, Outside, OnBoundary };

/// Position of q relative to the two real roots of a(n) x^2 + b(n) x + c(n),
/// decided without radicals via the sign of the quadratic at q. Requires
/// a(n) > 0 and a nonnegative discriminant at this n; throws
/// std::domain_error naming the violated condition otherwise.
IntervalPosition quadratic_root_interval_position(const Polynomial& a, const Polynomial& b,
                                                  const Polynomial& c, long n,
                                                  const Rational& q);

/// Both roots of a2 x^2 + a1 x + a0 when they are rational, sorted
/// ascending; nullopt when complex or irrational. Requires a2 != 0.
std::optional<std::pair<Rational, Rational>> quadratic_rational_roots(const Rational& a2,
                                                                      const Rational& a1,
                                                                      const Rational& a0);

}  // namespace logcert
