#pragma once

#include <string>
#include <vector>

#include "logcert/polynomial.hpp"
#include "logcert/sequences.hpp"

namespace logcert {

/// Linear recurrence with polynomial coefficients, normalized as
///   sum_{i=0..order} coeffs[i](n) * z_{n+i} = 0   for n >= n_min,
/// with a nonzero leading coefficient polynomial.
struct RecurrenceRelation {
  std::string name;
  std::vector<Polynomial> coeffs;  // c_0 .. c_order
  long n_min = 0;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Exact value of sum_i c_i(n) * z_{n+i}; zero means the relation holds.
  /// Requires the table to cover n .. n+order and n >= n_min.
  Rational residual(const SequenceTable& table, long n) const;

  /// Forward-unrolls the relation to extend the table through index upto.
  /// Every produced value must come out an exact positive integer; a failed
  /// division or nonpositive value throws std::runtime_error naming the
  /// index. A target at or below the current last index is a no-op.
  void extend(SequenceTable& table, long upto) const;
};

}  // namespace logcert
