#include "logcert/checkers.hpp"

#include <chrono>
#include <stdexcept>

namespace logcert {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_positive(const SequenceTable& values, long lo, long hi) {
  for (long n = lo; n <= hi; ++n)
    if (values.at(n) <= 0)
      throw std::invalid_argument("sequence " + values.name() + " has a nonpositive term at n=" +
                                  std::to_string(n) + "; log-behavior checks need positivity");
}

// Predicates run inside parallel regions, so anything that can throw is
// validated serially first.
void require_defined(const RationalFunction& f, long lo, long hi, const char* what) {
  for (long n = lo; n <= hi; ++n)
    if (!f.defined_at(n))
      throw std::domain_error(std::string(what) + " has a pole at n=" + std::to_string(n));
}

int value_sign(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }
int value_sign(const Rational& v) { return v.sign(); }
std::string value_str(const Integer& v) { return v.get_str(); }
std::string value_str(const Rational& v) { return v.to_string(); }

bool satisfies(int gap_sign, LogShape shape, Strictness strictness) {
  // gap_sign = sign(z_{n-1} z_{n+1} - z_n^2)
  if (shape == LogShape::Convex)
    return strictness == Strictness::Strict ? gap_sign > 0 : gap_sign >= 0;
  return strictness == Strictness::Strict ? gap_sign < 0 : gap_sign <= 0;
}

template <typename Table, typename Value>
CriterionReport log_shape_impl(const Table& values, LogShape shape, Strictness strictness,
                               long n_lo, long n_hi, ExecutionMode mode) {
  CriterionReport report;
  report.criterion = shape == LogShape::Convex ? "log-convexity" : "log-concavity";
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.strictness = strictness;
  auto t0 = Clock::now();
  if (!values.has(n_lo - 1) || !values.has(n_hi + 1))
    throw std::out_of_range(report.criterion + ": table must cover [" +
                            std::to_string(n_lo - 1) + ", " + std::to_string(n_hi + 1) + "]");
  auto violation = find_first_violation(
      n_lo, n_hi,
      [&](long n) {
        Value gap = values.at(n - 1) * values.at(n + 1) - values.at(n) * values.at(n);
        return satisfies(value_sign(gap), shape, strictness);
      },
      mode);
  if (violation) {
    Value lhs = values.at(*violation - 1) * values.at(*violation + 1);
    Value rhs = values.at(*violation) * values.at(*violation);
    report.verdict = Verdict::fail(*violation, value_str(lhs), value_str(rhs));
  }
  report.duration_ms = ms_since(t0);
  return report;
}

// Estimated decimal digits of value^exp.
long power_digits(const Integer& value, long exp) {
  return static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 10)) * exp;
}

Integer pow_big(const Integer& base, long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace

Verdict combine(const std::vector<SubVerdict>& details) {
  const SubVerdict* worst_fail = nullptr;
  const SubVerdict* worst_indet = nullptr;
  for (const auto& d : details) {
    if (d.verdict.kind == VerdictKind::Fail &&
        (!worst_fail || d.verdict.witness < worst_fail->verdict.witness))
      worst_fail = &d;
    if (d.verdict.kind == VerdictKind::Indeterminate &&
        (!worst_indet || d.verdict.witness < worst_indet->verdict.witness))
      worst_indet = &d;
  }
  if (worst_fail) return worst_fail->verdict;
  if (worst_indet) return worst_indet->verdict;
  return Verdict::pass();
}

BoundFunction::BoundFunction(RationalFunction e, long from)
    : expr(std::move(e)), valid_from(from) {
  // No integer zero of the denominator at or beyond valid_from: scan up to
  // the Cauchy bound, beyond which the denominator cannot vanish.
  long scan_hi = std::max(valid_from, eventual_sign_bound(expr.den()));
  for (long n = valid_from; n <= scan_hi; ++n)
    if (!expr.defined_at(n))
      throw std::invalid_argument("BoundFunction: denominator vanishes at n=" +
                                  std::to_string(n));
}

Rational BoundFunction::at(long n) const {
  if (n < valid_from)
    throw std::out_of_range("BoundFunction: index " + std::to_string(n) + " below valid_from=" +
                            std::to_string(valid_from));
  return expr.eval(n);
}

CriterionReport check_log_shape_range(const SequenceTable& values, LogShape shape,
                                      Strictness strictness, long n_lo, long n_hi,
                                      ExecutionMode mode) {
  if (!values.has(n_lo - 1) || !values.has(n_hi + 1))
    throw std::out_of_range("log-shape check: table must cover [" + std::to_string(n_lo - 1) +
                            ", " + std::to_string(n_hi + 1) + "]");
  require_positive(values, n_lo - 1, n_hi + 1);
  return log_shape_impl<SequenceTable, Integer>(values, shape, strictness, n_lo, n_hi, mode);
}

CriterionReport check_log_shape_range(const QuotientTable& values, LogShape shape,
                                      Strictness strictness, long n_lo, long n_hi,
                                      ExecutionMode mode) {
  return log_shape_impl<QuotientTable, Rational>(values, shape, strictness, n_lo, n_hi, mode);
}

CriterionReport quadratic_interval_criterion(const Polynomial& a, const Polynomial& b,
                                             const Polynomial& c, long N,
                                             const QuotientTable& quotients, long n_hi,
                                             Strictness strictness, ExecutionMode mode) {
  CriterionReport report;
  report.criterion = "quadratic-interval-criterion";
  report.n_lo = std::max(N + 1, quotients.start());
  report.n_hi = n_hi;
  report.strictness = strictness;
  auto t0 = Clock::now();
  long lo = report.n_lo;
  if (!quotients.has(lo) || !quotients.has(n_hi))
    throw std::out_of_range("quadratic_interval_criterion: quotients must cover [" +
                            std::to_string(lo) + ", " + std::to_string(n_hi) + "]");

  if (a.is_zero()) {
    report.details.push_back({"leading-coefficient-positive", Verdict::fail(N + 1, "0", "0")});
  } else {
    auto cert_a = sign_for_all_n_geq(a, N + 1, Strictness::Strict);
    long witness = cert_a.blanket() ? N + 1 : cert_a.witness;
    report.details.push_back(
        {"leading-coefficient-positive",
         cert_a.verdict == SignVerdictKind::AllPositive
             ? Verdict::pass_with_note(cert_a.summary())
             : Verdict::fail(witness, a.eval(witness).to_string(), "0")});
  }

  Polynomial disc = b * b - Polynomial::from_ints({4}) * a * c;
  if (disc.is_zero()) {
    report.details.push_back(
        {"discriminant-nonnegative", Verdict::pass_with_note("identically zero")});
  } else {
    auto cert_disc = sign_for_all_n_geq(disc, N + 1, Strictness::Weak);
    long witness = cert_disc.blanket() ? N + 1 : cert_disc.witness;
    report.details.push_back(
        {"discriminant-nonnegative",
         cert_disc.verdict == SignVerdictKind::AllNonnegative
             ? Verdict::pass_with_note(cert_disc.summary())
             : Verdict::fail(witness, disc.eval(witness).to_string(), "0")});
  }

  // (iii) is only meaningful once (i) and (ii) hold on the range.
  if (report.details[0].verdict.passed() && report.details[1].verdict.passed()) {
    auto violation = find_first_violation(
        lo, n_hi,
        [&](long n) {
          auto pos = quadratic_root_interval_position(a, b, c, n, quotients.at(n));
          if (strictness == Strictness::Strict) return pos == IntervalPosition::Inside;
          return pos != IntervalPosition::Outside;
        },
        mode);
    if (violation) {
      const Rational& q = quotients.at(*violation);
      Rational value = a.eval(*violation) * q * q + b.eval(*violation) * q + c.eval(*violation);
      report.details.push_back(
          {"quotient-in-root-interval", Verdict::fail(*violation, value.to_string(), "0")});
    } else {
      report.details.push_back({"quotient-in-root-interval", Verdict::pass()});
    }

    // The criterion promises weak quotient monotonicity; re-check directly.
    auto mono = find_first_violation(
        lo, n_hi - 1, [&](long n) { return quotients.at(n) <= quotients.at(n + 1); }, mode);
    report.details.push_back(
        {"implied-quotient-monotonicity",
         mono ? Verdict::fail(*mono, quotients.at(*mono).to_string(),
                              quotients.at(*mono + 1).to_string())
              : Verdict::pass()});
  }

  report.verdict = combine(report.details);
  report.duration_ms = ms_since(t0);
  return report;
}

CriterionReport interlacing_check(const QuotientTable& quotients, const BoundFunction& bound,
                                  long N, long n_hi, MonotoneMode direction,
                                  Strictness strictness, ExecutionMode mode) {
  CriterionReport report;
  report.criterion = "interlacing";
  report.n_lo = N + 1;
  report.n_hi = n_hi;
  report.strictness = strictness;
  auto t0 = Clock::now();
  if (!quotients.has(N + 1) || !quotients.has(n_hi))
    throw std::out_of_range("interlacing_check: quotients must cover [" + std::to_string(N + 1) +
                            ", " + std::to_string(n_hi) + "]");
  if (bound.valid_from > N)
    throw std::out_of_range("interlacing_check: bound undefined at n=" + std::to_string(N));

  auto ok_pair = [&](const Rational& lo_v, const Rational& hi_v) {
    return strictness == Strictness::Strict ? lo_v < hi_v : lo_v <= hi_v;
  };
  auto violation = find_first_violation(
      N + 1, n_hi,
      [&](long n) {
        const Rational& q = quotients.at(n);
        Rational prev = bound.at(n - 1), cur = bound.at(n);
        if (direction == MonotoneMode::Increasing) return ok_pair(prev, q) && ok_pair(q, cur);
        return ok_pair(q, prev) && ok_pair(cur, q);
      },
      mode);
  if (violation) {
    long n = *violation;
    report.verdict =
        Verdict::fail(n, bound.at(n - 1).to_string() + " vs " + quotients.at(n).to_string(),
                      quotients.at(n).to_string() + " vs " + bound.at(n).to_string());
  }
  report.duration_ms = ms_since(t0);
  return report;
}

CriterionReport ratio_log_concavity_criterion(const RationalFunction& u,
                                              const RationalFunction& v, const BoundFunction& h,
                                              long N, const QuotientTable& quotients, long n_hi,
                                              ExecutionMode mode) {
  CriterionReport report;
  report.criterion = "ratio-log-concavity-criterion";
  report.n_lo = N + 2;
  report.n_hi = n_hi;
  auto t0 = Clock::now();
  long lo = N + 2;
  if (!quotients.has(lo) || !quotients.has(n_hi))
    throw std::out_of_range("ratio_log_concavity_criterion: quotients must cover [" +
                            std::to_string(lo) + ", " + std::to_string(n_hi) + "]");
  if (h.valid_from > lo)
    throw std::out_of_range("ratio_log_concavity_criterion: bound undefined at n=" +
                            std::to_string(lo));
  require_defined(u, lo, n_hi + 1, "u");
  require_defined(v, lo, n_hi + 1, "v");

  // Sign convention: v(n) < 0 on the whole range.
  auto sign_violation =
      find_first_violation(lo, n_hi, [&](long n) { return v.eval(n).sign() < 0; }, mode);
  report.details.push_back(
      {"second-coefficient-negative",
       sign_violation ? Verdict::fail(*sign_violation, v.eval(*sign_violation).to_string(), "0")
                      : Verdict::pass()});
  if (sign_violation) {
    report.verdict = combine(report.details);
    report.duration_ms = ms_since(t0);
    return report;
  }

  // (i) 3u(n)/4 <= q_n <= h(n), exact per index.
  auto cond1 = find_first_violation(
      lo, n_hi,
      [&](long n) {
        const Rational& q = quotients.at(n);
        return Rational(3) * u.eval(n) / Rational(4) <= q && q <= h.at(n);
      },
      mode);
  report.details.push_back(
      {"quotient-bounds",
       cond1 ? Verdict::fail(*cond1,
                             (Rational(3) * u.eval(*cond1) / Rational(4)).to_string() + " vs " +
                                 quotients.at(*cond1).to_string(),
                             quotients.at(*cond1).to_string() + " vs " + h.at(*cond1).to_string())
             : Verdict::pass()});

  // (ii) per-index exact evaluation of the quartic expression.
  auto cond2_value = [&](long n) {
    Rational hn = h.at(n);
    Rational un = u.eval(n), un1 = u.eval(n + 1);
    Rational vn = v.eval(n), vn1 = v.eval(n + 1);
    return hn * hn * hn * hn - un * hn * hn * hn - un1 * vn * hn - vn * vn1;
  };
  auto cond2 =
      find_first_violation(lo, n_hi, [&](long n) { return cond2_value(n).sign() < 0; }, mode);
  report.details.push_back(
      {"quartic-expression-negative",
       cond2 ? Verdict::fail(*cond2, cond2_value(*cond2).to_string(), "0") : Verdict::pass()});

  // (ii) again as a single symbolic certificate covering the tail.
  RationalFunction expr = h.expr * h.expr * h.expr * h.expr - u * h.expr * h.expr * h.expr -
                          u.shifted(1) * v * h.expr - v * v.shifted(1);
  auto cert = sign_for_all_n_geq(expr, lo, Strictness::Strict);
  report.details.push_back({"quartic-expression-certificate",
                            cert.verdict == SignVerdictKind::AllNegative
                                ? Verdict::pass_with_note(cert.summary())
                                : Verdict::fail(cert.blanket() ? lo : cert.witness,
                                                expr.to_string(), "0")});

  report.verdict = combine(report.details);
  report.duration_ms = ms_since(t0);
  return report;
}

CriterionReport nth_root_increasing_check(const SequenceTable& values, long n_lo, long n_hi,
                                          ExecutionMode mode) {
  CriterionReport report;
  report.criterion = "nth-root-increasing";
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  auto t0 = Clock::now();
  if (!values.has(n_lo) || !values.has(n_hi + 1))
    throw std::out_of_range("nth_root_increasing_check: table must cover [" +
                            std::to_string(n_lo) + ", " + std::to_string(n_hi + 1) + "]");
  require_positive(values, n_lo, n_hi + 1);
  for (long n = n_lo; n <= n_hi; ++n)
    if (power_digits(values.at(n), n + 1) > kExactPowerDigitBudget ||
        power_digits(values.at(n + 1), n) > kExactPowerDigitBudget)
      throw std::length_error("nth_root_increasing_check: digit budget exceeded at n=" +
                              std::to_string(n));
  auto violation = find_first_violation(
      n_lo, n_hi,
      [&](long n) { return pow_big(values.at(n), n + 1) < pow_big(values.at(n + 1), n); }, mode);
  if (violation) {
    long n = *violation;
    report.verdict = Verdict::fail(n, pow_big(values.at(n), n + 1).get_str(),
                                   pow_big(values.at(n + 1), n).get_str());
  }
  report.duration_ms = ms_since(t0);
  return report;
}

Verdict nth_root_log_concave_at(const SequenceTable& values, long n, RootCheckMode mode,
                                const PrecisionLadder& ladder) {
  if (n < 2) throw std::domain_error("nth_root_log_concave_at: need n >= 2");
  const Integer& prev = values.at(n - 1);
  const Integer& cur = values.at(n);
  const Integer& next = values.at(n + 1);
  if (prev <= 0 || cur <= 0 || next <= 0)
    throw std::invalid_argument("nth_root_log_concave_at: values must be positive");

  bool exact = mode == RootCheckMode::Exact;
  if (mode == RootCheckMode::Auto)
    exact = power_digits(cur, 2 * (n - 1) * (n + 1)) <= kExactPowerDigitBudget;

  if (exact) {
    if (power_digits(cur, 2 * (n - 1) * (n + 1)) > kExactPowerDigitBudget)
      throw std::length_error("nth_root_log_concave_at: digit budget exceeded at n=" +
                              std::to_string(n));
    Integer lhs = pow_big(cur, 2 * (n - 1) * (n + 1));
    Integer rhs = pow_big(prev, n * (n + 1)) * pow_big(next, n * (n - 1));
    if (lhs > rhs) return Verdict::pass();
    return Verdict::fail(n, lhs.get_str(), rhs.get_str());
  }

  CertifiedBool r = nth_root_log_concavity_interval(prev, cur, next, n, ladder);
  if (!r.has_value())
    return Verdict::indeterminate(
        n, "log enclosure still straddles zero at " + std::to_string(ladder.max_bits) + " bits");
  if (*r) return Verdict::pass();
  return Verdict::fail(n, "interval-certified violation", "");
}

namespace {

// Exceptions cannot cross the parallel region, so budget and positivity are
// validated before scanning.
void validate_root_log_concave_range(const SequenceTable& values, long n_lo, long n_hi,
                                     RootCheckMode mode) {
  if (n_lo < 2) throw std::domain_error("nth-root log-concavity needs n >= 2");
  if (!values.has(n_lo - 1) || !values.has(n_hi + 1))
    throw std::out_of_range("nth-root log-concavity: table must cover [" +
                            std::to_string(n_lo - 1) + ", " + std::to_string(n_hi + 1) + "]");
  require_positive(values, n_lo - 1, n_hi + 1);
  if (mode == RootCheckMode::Exact)
    for (long n = n_lo; n <= n_hi; ++n)
      if (power_digits(values.at(n), 2 * (n - 1) * (n + 1)) > kExactPowerDigitBudget)
        throw std::length_error("nth-root log-concavity: digit budget exceeded at n=" +
                                std::to_string(n));
}

}  // namespace

CriterionReport nth_root_log_concave_check(const SequenceTable& values, long n_lo, long n_hi,
                                           RootCheckMode root_mode,
                                           const PrecisionLadder& ladder, ExecutionMode mode) {
  CriterionReport report;
  report.criterion = "nth-root-log-concavity";
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  auto t0 = Clock::now();
  validate_root_log_concave_range(values, n_lo, n_hi, root_mode);
  auto outcome = scan_range(
      n_lo, n_hi,
      [&](long n) {
        Verdict v = nth_root_log_concave_at(values, n, root_mode, ladder);
        if (v.kind == VerdictKind::Pass) return ScanResult::Ok;
        if (v.kind == VerdictKind::Fail) return ScanResult::Violation;
        return ScanResult::Indeterminate;
      },
      mode);
  if (outcome.first_fail)
    report.verdict = nth_root_log_concave_at(values, *outcome.first_fail, root_mode, ladder);
  else if (outcome.first_indeterminate)
    report.verdict =
        nth_root_log_concave_at(values, *outcome.first_indeterminate, root_mode, ladder);
  report.duration_ms = ms_since(t0);
  return report;
}

CriterionReport limit_diagnostics(const QuotientTable& quotients, const SequenceTable& values,
                                  long n_hi, long root_exact_hi,
                                  const Rational& ratio_gap_threshold,
                                  const PrecisionLadder& ladder, ExecutionMode mode) {
  CriterionReport report;
  report.criterion = "limit-diagnostics";
  report.n_lo = 1;
  report.n_hi = n_hi;
  auto t0 = Clock::now();
  if (!quotients.has(2) || !quotients.has(n_hi))
    throw std::out_of_range("limit_diagnostics: quotients must cover [2, " +
                            std::to_string(n_hi) + "]");
  if (!values.has(n_hi + 1))
    throw std::out_of_range("limit_diagnostics: values must cover [0, " +
                            std::to_string(n_hi + 1) + "]");
  require_positive(values, values.start(), n_hi + 1);
  validate_root_log_concave_range(values, 2, std::min(root_exact_hi, n_hi),
                                  RootCheckMode::Exact);

  // (a) squeeze toward 9: 9 - q_n in (9/(2n^2), 9/(2(n-1)^2)) for n >= 2.
  auto squeeze = find_first_violation(
      2, n_hi,
      [&](long n) {
        Rational gap = Rational(9) - quotients.at(n);
        return Rational(9, 2 * n * n) < gap && gap < Rational(9, 2 * (n - 1) * (n - 1));
      },
      mode);
  report.details.push_back(
      {"quotient-squeeze-to-9",
       squeeze ? Verdict::fail(*squeeze, (Rational(9) - quotients.at(*squeeze)).to_string(),
                               Rational(9, 2 * *squeeze * *squeeze).to_string() + " .. " +
                                   Rational(9, 2 * (*squeeze - 1) * (*squeeze - 1)).to_string())
               : Verdict::pass()});

  // (b) the limit equation x^2 - 10x + 9 = 0 has roots exactly {1, 9}.
  auto roots = quadratic_rational_roots(Rational(1), Rational(-10), Rational(9));
  bool roots_ok = roots && roots->first == Rational(1) && roots->second == Rational(9);
  report.details.push_back(
      {"limit-equation-roots",
       roots_ok
           ? Verdict::pass_with_note("roots {1, 9}")
           : Verdict::fail(0,
                           roots ? roots->first.to_string() + ", " + roots->second.to_string()
                                 : "no rational roots",
                           "{1, 9}")});

  // (c) r_n > 1 for n in [1, n_hi - 1]: exact power comparison.
  auto above_one = find_first_violation(
      1, n_hi - 1,
      [&](long n) { return pow_big(values.at(n + 1), n) > pow_big(values.at(n), n + 1); }, mode);
  report.details.push_back(
      {"root-ratio-above-1",
       above_one
           ? Verdict::fail(*above_one,
                           values.at(*above_one + 1).get_str() + "^" + std::to_string(*above_one),
                           values.at(*above_one).get_str() + "^" +
                               std::to_string(*above_one + 1))
           : Verdict::pass()});

  // r_n strictly decreasing on [1, n_hi-1] is n-th-root log-concavity on
  // [2, n_hi]: exact where the budget allows, certified intervals beyond.
  auto mode_for = [&](long n) {
    return n <= root_exact_hi ? RootCheckMode::Exact : RootCheckMode::Interval;
  };
  auto decreasing = scan_range(
      2, n_hi,
      [&](long n) {
        Verdict v = nth_root_log_concave_at(values, n, mode_for(n), ladder);
        if (v.kind == VerdictKind::Pass) return ScanResult::Ok;
        if (v.kind == VerdictKind::Fail) return ScanResult::Violation;
        return ScanResult::Indeterminate;
      },
      mode);
  if (decreasing.first_fail)
    report.details.push_back(
        {"root-ratio-strictly-decreasing",
         nth_root_log_concave_at(values, *decreasing.first_fail, mode_for(*decreasing.first_fail),
                                 ladder)});
  else if (decreasing.first_indeterminate)
    report.details.push_back(
        {"root-ratio-strictly-decreasing",
         Verdict::indeterminate(*decreasing.first_indeterminate, "precision exhausted")});
  else
    report.details.push_back({"root-ratio-strictly-decreasing", Verdict::pass()});

  // Certified closeness of r_{n_hi} to 1.
  CertifiedBool close =
      root_ratio_below(values.at(n_hi), values.at(n_hi + 1), n_hi, ratio_gap_threshold, ladder);
  std::string gap =
      root_ratio_gap_upper_bound(values.at(n_hi), values.at(n_hi + 1), n_hi, ladder.start_bits);
  if (!close.has_value())
    report.details.push_back(
        {"root-ratio-gap", Verdict::indeterminate(n_hi, "precision exhausted")});
  else if (*close)
    report.details.push_back(
        {"root-ratio-gap", Verdict::pass_with_note("r_" + std::to_string(n_hi) + " - 1 <= " +
                                                   gap + " < " +
                                                   ratio_gap_threshold.to_string())});
  else
    report.details.push_back(
        {"root-ratio-gap", Verdict::fail(n_hi, gap, ratio_gap_threshold.to_string())});

  report.verdict = combine(report.details);
  report.duration_ms = ms_since(t0);
  return report;
}

}  // namespace logcert
