#pragma once

#include <string>
#include <vector>

#include "logcert/interval_log.hpp"
#include "logcert/parallel.hpp"
#include "logcert/rational_function.hpp"
#include "logcert/sequences.hpp"

namespace logcert {

enum class VerdictKind { Pass, Fail, Indeterminate };

/// Outcome of one check. Fail always carries the smallest witness index in
/// the checked range plus the exact two sides of the violated comparison;
/// Indeterminate only arises from precision exhaustion in interval mode.
struct Verdict {
  VerdictKind kind = VerdictKind::Pass;
  long witness = 0;
  std::string lhs, rhs;   // exact values at the witness (Fail only)
  std::string reason;     // Indeterminate explanation or free-form note

  static Verdict pass() { return {}; }
  static Verdict pass_with_note(std::string note) {
    Verdict v;
    v.reason = std::move(note);
    return v;
  }
  static Verdict fail(long witness, std::string lhs = "", std::string rhs = "") {
    Verdict v;
    v.kind = VerdictKind::Fail;
    v.witness = witness;
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
  }
  static Verdict indeterminate(long witness, std::string reason) {
    Verdict v;
    v.kind = VerdictKind::Indeterminate;
    v.witness = witness;
    v.reason = std::move(reason);
    return v;
  }
  bool passed() const { return kind == VerdictKind::Pass; }
};

struct SubVerdict {
  std::string name;
  Verdict verdict;
};

struct CriterionReport {
  std::string criterion;
  long n_lo = 0, n_hi = 0;
  Strictness strictness = Strictness::Strict;
  Verdict verdict;
  std::vector<SubVerdict> details;
  double duration_ms = 0;

  bool passed() const { return verdict.passed(); }
};

/// Worst-case combination: Fail with the smallest witness dominates, then
/// Indeterminate with the smallest witness, then Pass.
Verdict combine(const std::vector<SubVerdict>& details);

/// Rational-function bound defined on all integers >= valid_from; the
/// constructor verifies the denominator has no integer zero there.
struct BoundFunction {
  RationalFunction expr;
  long valid_from = 0;

  BoundFunction(RationalFunction e, long from);
  Rational at(long n) const;
};

enum class LogShape { Convex, Concave };
enum class MonotoneMode { Increasing, Decreasing };

/// Exact check of z_{n-1} z_{n+1} >= z_n^2 (Convex) or <= (Concave) for
/// every n in [n_lo, n_hi]; strict variants use strict inequalities. The
/// table must cover [n_lo-1, n_hi+1] with positive values.
CriterionReport check_log_shape_range(const SequenceTable& values, LogShape shape,
                                      Strictness strictness, long n_lo, long n_hi,
                                      ExecutionMode mode = ExecutionMode::Parallel);
/// Same comparison on an exact rational-valued quotient table.
CriterionReport check_log_shape_range(const QuotientTable& values, LogShape shape,
                                      Strictness strictness, long n_lo, long n_hi,
                                      ExecutionMode mode = ExecutionMode::Parallel);

inline CriterionReport check_log_convex_range(const SequenceTable& v, Strictness s, long lo,
                                              long hi,
                                              ExecutionMode m = ExecutionMode::Parallel) {
  return check_log_shape_range(v, LogShape::Convex, s, lo, hi, m);
}
inline CriterionReport check_log_concave_range(const SequenceTable& v, Strictness s, long lo,
                                               long hi,
                                               ExecutionMode m = ExecutionMode::Parallel) {
  return check_log_shape_range(v, LogShape::Concave, s, lo, hi, m);
}

/// Log-convexity criterion for a sequence obeying
/// a(n) z_{n+1} + b(n) z_n + c(n) z_{n-1} = 0:
///   (i)  a(n) > 0 for n > N            (polynomial sign certificate)
///   (ii) b(n)^2 - 4 a(n) c(n) >= 0     (polynomial sign certificate)
///   (iii) each quotient q_n lies between the two characteristic roots,
///         decided radical-free through the sign of a q^2 + b q + c
/// plus the implied quotient monotonicity, re-checked directly.
CriterionReport quadratic_interval_criterion(const Polynomial& a, const Polynomial& b,
                                             const Polynomial& c, long N,
                                             const QuotientTable& quotients, long n_hi,
                                             Strictness strictness,
                                             ExecutionMode mode = ExecutionMode::Parallel);

/// Interlacing (sandwich) check: bound(n-1) <= q_n <= bound(n) in Increasing
/// mode, reversed in Decreasing mode, for n in [N+1, n_hi].
CriterionReport interlacing_check(const QuotientTable& quotients, const BoundFunction& bound,
                                  long N, long n_hi, MonotoneMode direction,
                                  Strictness strictness,
                                  ExecutionMode mode = ExecutionMode::Parallel);

/// Ratio log-concavity criterion for z_n = u(n) z_{n-1} + v(n) z_{n-2} with
/// v(n) < 0 on the range (checked):
///   (i)  3u(n)/4 <= q_n <= h(n) for n in [N+2, n_hi], exact;
///   (ii) h^4 - u h^3 - u(n+1) v(n) h - v(n) v(n+1) < 0, both per-index and
///        as one rational-function sign certificate covering the tail.
CriterionReport ratio_log_concavity_criterion(const RationalFunction& u,
                                              const RationalFunction& v,
                                              const BoundFunction& h, long N,
                                              const QuotientTable& quotients, long n_hi,
                                              ExecutionMode mode = ExecutionMode::Parallel);

/// Exact big-integer check of z_n^{n+1} < z_{n+1}^n over [n_lo, n_hi].
CriterionReport nth_root_increasing_check(const SequenceTable& values, long n_lo, long n_hi,
                                          ExecutionMode mode = ExecutionMode::Parallel);

enum class RootCheckMode { Exact, Interval, Auto };

/// Single-index decision of z_n^{2(n-1)(n+1)} > z_{n-1}^{n(n+1)} z_{n+1}^{n(n-1)}
/// (strict log-concavity of the n-th root sequence at n >= 2). Exact mode
/// compares big-integer powers and refuses results beyond the digit budget;
/// Interval mode uses log enclosures and may return Indeterminate.
Verdict nth_root_log_concave_at(const SequenceTable& values, long n, RootCheckMode mode,
                                const PrecisionLadder& ladder);

/// Range wrapper over nth_root_log_concave_at (Auto switches modes on the
/// digit budget).
CriterionReport nth_root_log_concave_check(const SequenceTable& values, long n_lo, long n_hi,
                                           RootCheckMode root_mode,
                                           const PrecisionLadder& ladder,
                                           ExecutionMode mode = ExecutionMode::Parallel);

/// Limit diagnostics:
///  (a) 9 - q_n in (9/(2n^2), 9/(2(n-1)^2)) exactly for 2 <= n <= n_hi;
///  (b) the roots of x^2 - 10x + 9 are exactly {1, 9};
///  (c) the consecutive-root ratio r_n = z_{n+1}^{1/(n+1)} / z_n^{1/n}
///      satisfies r_n > 1 and decreases strictly, with a certified bound
///      r_{n_hi} - 1 < ratio_gap_threshold.
CriterionReport limit_diagnostics(const QuotientTable& quotients, const SequenceTable& values,
                                  long n_hi, long root_exact_hi,
                                  const Rational& ratio_gap_threshold,
                                  const PrecisionLadder& ladder,
                                  ExecutionMode mode = ExecutionMode::Parallel);

/// Digit budget for exact power comparisons (estimated output digits).
inline constexpr long kExactPowerDigitBudget = 10'000'000;

}  // namespace logcert
