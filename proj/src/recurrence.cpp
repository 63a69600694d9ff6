#include "logcert/recurrence.hpp"

#include <stdexcept>

namespace logcert {

Rational RecurrenceRelation::residual(const SequenceTable& table, long n) const {
  if (n < n_min)
    throw std::domain_error("RecurrenceRelation " + name + ": residual below n_min at n=" +
                            std::to_string(n));
  Rational acc;
  for (int i = 0; i <= order(); ++i)
    acc += coeffs[static_cast<size_t>(i)].eval(n) * Rational(table.at(n + i));
  return acc;
}

void RecurrenceRelation::extend(SequenceTable& table, long upto) const {
  const int r = order();
  for (long target = table.last() + 1; target <= upto; ++target) {
    long n = target - r;
    if (n < n_min)
      throw std::runtime_error("RecurrenceRelation " + name +
                               ": cannot extend, relation not asserted at n=" + std::to_string(n));
    Rational lead = coeffs[static_cast<size_t>(r)].eval(n);
    if (lead.is_zero())
      throw std::runtime_error("RecurrenceRelation " + name +
                               ": leading coefficient vanishes at n=" + std::to_string(n));
    Rational acc;
    for (int i = 0; i < r; ++i)
      acc += coeffs[static_cast<size_t>(i)].eval(n) * Rational(table.at(n + i));
    Rational value = -acc / lead;
    if (!value.is_integer())
      throw std::runtime_error("RecurrenceRelation " + name + ": non-exact division at index " +
                               std::to_string(target) + " (got " + value.to_string() + ")");
    if (value.sign() <= 0)
      throw std::runtime_error("RecurrenceRelation " + name + ": nonpositive value at index " +
                               std::to_string(target));
    table.push_back(value.num(), Provenance::Recurrence);
  }
}

}  // namespace logcert
