#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "logcert/polynomial.hpp"
#include "logcert/rational.hpp"

namespace logcert {

/// Outcome of a directed-rounding comparison: certified true/false, or
/// nullopt when the enclosures still overlap at the highest precision tried.
using CertifiedBool = std::optional<bool>;

/// Precision ladder for enclosure computations: start at start_bits and
/// double until max_bits before giving up. Both clamped to [16, 1<<20].
struct PrecisionLadder {
  long start_bits = 128;
  long max_bits = 4096;
};

/// Certified decision of
///   2(n-1)(n+1) ln z_n  >  n(n+1) ln z_prev + n(n-1) ln z_next
/// via directed-rounding log enclosures. All inputs must be >= 1.
CertifiedBool nth_root_log_concavity_interval(const Integer& z_prev, const Integer& z_n,
                                              const Integer& z_next, long n,
                                              const PrecisionLadder& ladder);

/// Certified decision of z_next^{1/(n+1)} / z_n^{1/n} - 1 < threshold.
CertifiedBool root_ratio_below(const Integer& z_n, const Integer& z_next, long n,
                               const Rational& threshold, const PrecisionLadder& ladder);

/// Certified upper bound on z_next^{1/(n+1)} / z_n^{1/n} - 1, as a decimal
/// string, for diagnostics.
std::string root_ratio_gap_upper_bound(const Integer& z_n, const Integer& z_next, long n,
                                       long bits);

/// Decimal rendering of the lower (-) or upper (+) root of
/// a(n) x^2 + b(n) x + c(n) at the given index, correct to `digits` decimal
/// places: the enclosure is tightened until both endpoints round to the same
/// string. Requires a(n) > 0 and a positive discriminant.
enum class QuadraticRoot { Lower, Upper };
std::string quadratic_root_decimal(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                                   long n, QuadraticRoot which, int digits,
                                   const PrecisionLadder& ladder);

}  // namespace logcert
