#include "logcert/interval_log.hpp"

#include <algorithm>
#include <stdexcept>

namespace logcert {

namespace {

constexpr long kMinBits = 16;
constexpr long kMaxBits = 1L << 20;

long clamp_bits(long bits) { return std::clamp(bits, kMinBits, kMaxBits); }

// Minimal RAII wrapper; one value, fixed precision.
class Real {
 public:
  explicit Real(long bits) { mpfr_init2(x_, static_cast<mpfr_prec_t>(bits)); }
  ~Real() { mpfr_clear(x_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

// ln z rounded in the requested direction (monotonicity of ln makes the
// two-step rounding sound). Requires z >= 1.
void log_directed(mpfr_ptr out, const Integer& z, mpfr_rnd_t rnd) {
  if (z < 1) throw std::domain_error("log enclosure: value below 1");
  Real t(mpfr_get_prec(out));
  mpfr_set_z(t.get(), z.get_mpz_t(), rnd);
  mpfr_log(out, t.get(), rnd);
}

}  // namespace

CertifiedBool nth_root_log_concavity_interval(const Integer& z_prev, const Integer& z_n,
                                              const Integer& z_next, long n,
                                              const PrecisionLadder& ladder) {
  if (n < 2) throw std::domain_error("nth_root_log_concavity_interval: need n >= 2");
  const unsigned long wl = static_cast<unsigned long>(2 * (n - 1) * (n + 1));
  const unsigned long wp = static_cast<unsigned long>(n * (n + 1));
  const unsigned long wn = static_cast<unsigned long>(n * (n - 1));
  for (long bits = clamp_bits(ladder.start_bits);; bits *= 2) {
    Real lhs_lo(bits), lhs_hi(bits), term(bits), rhs_lo(bits), rhs_hi(bits);

    log_directed(lhs_lo.get(), z_n, MPFR_RNDD);
    mpfr_mul_ui(lhs_lo.get(), lhs_lo.get(), wl, MPFR_RNDD);
    log_directed(lhs_hi.get(), z_n, MPFR_RNDU);
    mpfr_mul_ui(lhs_hi.get(), lhs_hi.get(), wl, MPFR_RNDU);

    log_directed(rhs_lo.get(), z_prev, MPFR_RNDD);
    mpfr_mul_ui(rhs_lo.get(), rhs_lo.get(), wp, MPFR_RNDD);
    log_directed(term.get(), z_next, MPFR_RNDD);
    mpfr_mul_ui(term.get(), term.get(), wn, MPFR_RNDD);
    mpfr_add(rhs_lo.get(), rhs_lo.get(), term.get(), MPFR_RNDD);

    log_directed(rhs_hi.get(), z_prev, MPFR_RNDU);
    mpfr_mul_ui(rhs_hi.get(), rhs_hi.get(), wp, MPFR_RNDU);
    log_directed(term.get(), z_next, MPFR_RNDU);
    mpfr_mul_ui(term.get(), term.get(), wn, MPFR_RNDU);
    mpfr_add(rhs_hi.get(), rhs_hi.get(), term.get(), MPFR_RNDU);

    if (mpfr_cmp(lhs_lo.get(), rhs_hi.get()) > 0) return true;
    if (mpfr_cmp(lhs_hi.get(), rhs_lo.get()) < 0) return false;
    if (bits >= clamp_bits(ladder.max_bits)) return std::nullopt;
  }
}

namespace {

// Enclosure of ln(z_next)/(n+1) - ln(z_n)/n, the log of the root ratio.
void root_ratio_log_bound(mpfr_ptr out, const Integer& z_n, const Integer& z_next, long n,
                          mpfr_rnd_t rnd) {
  mpfr_rnd_t opp = (rnd == MPFR_RNDU) ? MPFR_RNDD : MPFR_RNDU;
  Real term(mpfr_get_prec(out));
  log_directed(out, z_next, rnd);
  mpfr_div_ui(out, out, static_cast<unsigned long>(n + 1), rnd);
  log_directed(term.get(), z_n, opp);
  mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(n), opp);
  mpfr_sub(out, out, term.get(), rnd);
}

}  // namespace

CertifiedBool root_ratio_below(const Integer& z_n, const Integer& z_next, long n,
                               const Rational& threshold, const PrecisionLadder& ladder) {
  if (n < 1) throw std::domain_error("root_ratio_below: need n >= 1");
  for (long bits = clamp_bits(ladder.start_bits);; bits *= 2) {
    Real bound(bits), ratio(bits), limit(bits);
    mpfr_set_q(limit.get(), threshold.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_add_ui(limit.get(), limit.get(), 1, MPFR_RNDD);

    root_ratio_log_bound(bound.get(), z_n, z_next, n, MPFR_RNDU);
    mpfr_exp(ratio.get(), bound.get(), MPFR_RNDU);
    if (mpfr_cmp(ratio.get(), limit.get()) < 0) return true;

    mpfr_set_q(limit.get(), threshold.raw().get_mpq_t(), MPFR_RNDU);
    mpfr_add_ui(limit.get(), limit.get(), 1, MPFR_RNDU);
    root_ratio_log_bound(bound.get(), z_n, z_next, n, MPFR_RNDD);
    mpfr_exp(ratio.get(), bound.get(), MPFR_RNDD);
    if (mpfr_cmp(ratio.get(), limit.get()) >= 0) return false;

    if (bits >= clamp_bits(ladder.max_bits)) return std::nullopt;
  }
}

std::string root_ratio_gap_upper_bound(const Integer& z_n, const Integer& z_next, long n,
                                       long bits) {
  Real bound(clamp_bits(bits)), ratio(clamp_bits(bits));
  root_ratio_log_bound(bound.get(), z_n, z_next, n, MPFR_RNDU);
  mpfr_exp(ratio.get(), bound.get(), MPFR_RNDU);
  mpfr_sub_ui(ratio.get(), ratio.get(), 1, MPFR_RNDU);
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.3Re", ratio.get());
  return buf;
}

std::string quadratic_root_decimal(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                                   long n, QuadraticRoot which, int digits,
                                   const PrecisionLadder& ladder) {
  Rational an = a.eval(n), bn = b.eval(n), cn = c.eval(n);
  if (an.sign() <= 0) throw std::domain_error("quadratic_root_decimal: a(n) must be positive");
  Rational disc = bn * bn - Rational(4) * an * cn;
  if (disc.sign() <= 0)
    throw std::domain_error("quadratic_root_decimal: discriminant must be positive");

  for (long bits = clamp_bits(ladder.start_bits);; bits *= 2) {
    std::string rendered[2];
    for (int side = 0; side < 2; ++side) {
      mpfr_rnd_t rnd = side == 0 ? MPFR_RNDD : MPFR_RNDU;
      // (-b - sqrt(disc)) / 2a needs the sqrt rounded in the opposite
      // direction to stay on the requested side.
      mpfr_rnd_t sqrt_rnd = (which == QuadraticRoot::Lower)
                                ? (side == 0 ? MPFR_RNDU : MPFR_RNDD)
                                : rnd;
      Real root(bits), num(bits), den(bits);
      mpfr_set_q(root.get(), disc.raw().get_mpq_t(), sqrt_rnd);
      mpfr_sqrt(root.get(), root.get(), sqrt_rnd);
      if (which == QuadraticRoot::Lower) mpfr_neg(root.get(), root.get(), rnd);
      mpfr_set_q(num.get(), (-bn).raw().get_mpq_t(), rnd);
      mpfr_add(num.get(), num.get(), root.get(), rnd);
      // den > 0; to push num/den toward the requested side, a nonnegative
      // numerator wants the opposite rounding on den.
      bool num_nonneg = mpfr_sgn(num.get()) >= 0;
      mpfr_rnd_t den_rnd = (num_nonneg == (side == 0)) ? MPFR_RNDU : MPFR_RNDD;
      mpfr_set_q(den.get(), (Rational(2) * an).raw().get_mpq_t(), den_rnd);
      mpfr_div(num.get(), num.get(), den.get(), rnd);
      char buf[128];
      mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, num.get());
      rendered[side] = buf;
    }
    if (rendered[0] == rendered[1]) return rendered[0];
    if (bits >= clamp_bits(ladder.max_bits))
      throw std::runtime_error("quadratic_root_decimal: enclosure did not settle at " +
                               std::to_string(bits) + " bits");
  }
}

}  // namespace logcert
