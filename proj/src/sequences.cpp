#include "logcert/sequences.hpp"

#include <stdexcept>

namespace logcert {

const std::vector<Integer>& BinomialCache::row(long n) {
  auto idx = static_cast<size_t>(n);
  if (idx < rows_.size() && !rows_[idx].empty()) return rows_[idx];
  if (idx >= rows_.size()) rows_.resize(idx + 1);
  std::vector<Integer> r(idx + 1);
  r[0] = 1;
  for (long k = 1; k <= n; ++k) {
    r[static_cast<size_t>(k)] = r[static_cast<size_t>(k - 1)] * (n - k + 1);
    mpz_divexact_ui(r[static_cast<size_t>(k)].get_mpz_t(), r[static_cast<size_t>(k)].get_mpz_t(),
                    static_cast<unsigned long>(k));
  }
  rows_[idx] = std::move(r);
  return rows_[idx];
}

const Integer& BinomialCache::operator()(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return zero_;
  return row(n)[static_cast<size_t>(k)];
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer direct_sum_S(long n) {
  if (n < 0) throw std::domain_error("direct_sum_S: negative index");
  Integer total = 0;
  Integer b = 1;  // C(n, k)
  Integer c = 1;  // C(2k, k)
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      b *= (n - k + 1);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
      c *= 2 * (2 * k - 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    }
    total += b * b * c * (2 * k + 1);
  }
  return total;
}

Integer direct_sum_S_reference(long n, BinomialCache& cache) {
  Integer total = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer& b = cache(n, k);
    total += b * b * cache(2 * k, k) * (2 * k + 1);
  }
  return total;
}

Integer direct_sum_f(long n) {
  if (n < 0) throw std::domain_error("direct_sum_f: negative index");
  Rational total;
  Integer b = 1;  // C(n, k)
  Integer c = 1;  // C(2k, k)
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      b *= (n - k + 1);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
      c *= 2 * (2 * k - 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    }
    Integer b_next = (k == n) ? Integer(0) : Integer(b * (n - k));  // C(n, k+1)
    if (k != n) mpz_divexact_ui(b_next.get_mpz_t(), b_next.get_mpz_t(),
                                static_cast<unsigned long>(k + 1));
    total += Rational(c, Integer(k + 1)) * Rational(6 * k * b * b + b * b_next);
  }
  if (!total.is_integer())
    throw std::logic_error("direct_sum_f: non-integral sum at n=" + std::to_string(n));
  return total.num();
}

size_t SequenceTable::index(long n) const {
  if (!has(n))
    throw std::out_of_range("SequenceTable " + name_ + ": index " + std::to_string(n) +
                            " outside [" + std::to_string(start_) + ", " +
                            std::to_string(last()) + "]");
  return static_cast<size_t>(n - start_);
}

const Integer& SequenceTable::at(long n) const { return values_[index(n)]; }

Provenance SequenceTable::provenance(long n) const { return prov_[index(n)]; }

void SequenceTable::push_back(Integer value, Provenance p) {
  values_.push_back(std::move(value));
  prov_.push_back(p);
}

void SequenceTable::corrupt_value(long n, Integer value) { values_[index(n)] = std::move(value); }

QuotientTable QuotientTable::from(const SequenceTable& table) {
  if (table.empty() || table.last() == table.start())
    throw std::invalid_argument("QuotientTable: need at least two values");
  QuotientTable q(table.name(), table.start() + 1);
  for (long n = table.start(); n <= table.last(); ++n)
    if (table.at(n) <= 0)
      throw std::invalid_argument("QuotientTable: nonpositive value at n=" + std::to_string(n));
  q.values_.reserve(static_cast<size_t>(table.last() - table.start()));
  for (long n = table.start() + 1; n <= table.last(); ++n)
    q.values_.emplace_back(table.at(n), table.at(n - 1));
  return q;
}

const Rational& QuotientTable::at(long n) const {
  if (!has(n))
    throw std::out_of_range("QuotientTable " + base_ + ": index " + std::to_string(n) +
                            " outside [" + std::to_string(start_) + ", " +
                            std::to_string(last()) + "]");
  return values_[static_cast<size_t>(n - start_)];
}

SequenceTable build_S_table(long n_hi, ExecutionMode mode) {
  std::vector<Integer> values(static_cast<size_t>(n_hi) + 1);
  if (mode == ExecutionMode::Serial) {
    for (long n = 0; n <= n_hi; ++n) values[static_cast<size_t>(n)] = direct_sum_S(n);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long n = 0; n <= n_hi; ++n) values[static_cast<size_t>(n)] = direct_sum_S(n);
  }
  SequenceTable table("S", 0);
  for (auto& v : values) table.push_back(std::move(v), Provenance::DirectSum);
  return table;
}

SequenceTable build_S_table_reference(long n_hi) {
  SequenceTable table("S", 0);
  BinomialCache cache;
  for (long n = 0; n <= n_hi; ++n)
    table.push_back(direct_sum_S_reference(n, cache), Provenance::DirectSum);
  return table;
}

SequenceTable build_f_table(long n_hi, ExecutionMode mode) {
  std::vector<Integer> values(static_cast<size_t>(n_hi) + 1);
  if (mode == ExecutionMode::Serial) {
    for (long n = 0; n <= n_hi; ++n) values[static_cast<size_t>(n)] = direct_sum_f(n);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long n = 0; n <= n_hi; ++n) values[static_cast<size_t>(n)] = direct_sum_f(n);
  }
  SequenceTable table("f", 0);
  for (auto& v : values) table.push_back(std::move(v), Provenance::DirectSum);
  return table;
}

SequenceTable build_u_table(const SequenceTable& s_table, long n_hi) {
  SequenceTable table("u", 0);
  for (long n = 0; n <= n_hi; ++n) table.push_back(4 * n * s_table.at(n), Provenance::DirectSum);
  return table;
}

bool check_companion_identity(const SequenceTable& s_table, const SequenceTable& f_table,
                              long n) {
  if (n < 0) throw std::domain_error("check_companion_identity: negative index");
  if (n == 0) return f_table.at(0) == 0;
  Integer lhs = 4 * n * s_table.at(n);
  Integer rhs = (n + 1) * (n + 1) * f_table.at(n) - n * n * f_table.at(n - 1);
  return lhs == rhs;
}

}  // namespace logcert
