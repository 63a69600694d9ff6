#pragma once

#include "logcert/rational_function.hpp"
#include "logcert/recurrence.hpp"

namespace logcert::catalog {

/// Coefficients of the three-term relation a(n) z_{n+1} + b(n) z_n +
/// c(n) z_{n-1} = 0 satisfied by S:
///   a(n) = (n+1)^2 (4n-1)(4n+3)
///   b(n) = -(4n-1)(4n+7)(10n^2+10n+3)
///   c(n) = 9 n^2 (4n+3)(4n+7)
struct ThreeTermCoefficients {
  Polynomial a, b, c;
};
const ThreeTermCoefficients& three_term_coefficients();

/// b(n)^2 - 4 a(n) c(n) of the three-term relation (degree 8).
const Polynomial& three_term_discriminant();

/// Order-3 relation 9(n+1)^2 S_n - (19n^2+74n+87) S_{n+1}
/// + (n+3)(11n+29) S_{n+2} - (n+3)^2 S_{n+3} = 0, n >= 0.
const RecurrenceRelation& four_term_recurrence();

/// The three-term relation stored in forward form (indices n..n+2), valid
/// from n = 0; the relation above at center index m corresponds to n = m-1.
const RecurrenceRelation& three_term_recurrence();

/// Order-3 relation on u(n) = 4n S(n), valid from n = 1.
const RecurrenceRelation& scaled_order3_recurrence();

/// Order-3 relation with quartic/sextic coefficients obtained through the
/// companion sequence, asserted here on u, valid from n = 1.
const RecurrenceRelation& companion_order3_recurrence();

/// Order-2 relation on u, valid from n = 1.
const RecurrenceRelation& scaled_order2_recurrence();

/// h(n) = 9 - 9/(2n^2), the squeeze bound with h(n-1) < s_n < h(n).
const RationalFunction& squeeze_bound();

/// Midpoint -b(n)/(2a(n)) of the three-term characteristic roots; sits
/// strictly between them wherever the discriminant is positive.
const RationalFunction& root_midpoint();

/// u(n), v(n) of the normalized two-term form z_n = u(n) z_{n-1} + v(n) z_{n-2}
/// (v(n) < 0 for n >= 2):
///   u(n) = (4n+3)(10n^2-10n+3) / (n^2 (4n-1))
///   v(n) = -9 (n-1)^2 (4n+3) / (n^2 (4n-5))
const RationalFunction& ratio_u();
const RationalFunction& ratio_v();

}  // namespace logcert::catalog
