#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcert/parallel.hpp"
#include "logcert/rational.hpp"

namespace logcert {

/// Binomial coefficients memoized row by row; each row is built with the
/// multiplicative recurrence C(n,k) = C(n,k-1)*(n-k+1)/k. Row construction
/// mutates the cache, so a shared instance must not be used concurrently.
class BinomialCache {
 public:
  /// C(n, k), with 0 for k < 0 or k > n. Requires n >= 0.
  const Integer& operator()(long n, long k);

 private:
  const std::vector<Integer>& row(long n);
  std::vector<std::vector<Integer>> rows_;
  Integer zero_{0};
};

/// C(n, k) without shared state (safe to call concurrently).
Integer binomial(long n, long k);

/// S(n) = sum_k C(n,k)^2 * C(2k,k) * (2k+1), by direct summation with
/// incrementally maintained binomials. Self-contained per index.
Integer direct_sum_S(long n);

/// Literal-formula reference: every binomial fetched from the cache.
Integer direct_sum_S_reference(long n, BinomialCache& cache);

/// f(n) = sum_k C(2k,k)/(k+1) * (6k*C(n,k)^2 + C(n,k)*C(n,k+1)), summed over
/// rationals; throws std::logic_error if the total is not an integer.
Integer direct_sum_f(long n);

enum class Provenance { DirectSum, Recurrence };

/// Contiguous run of exact values of one sequence, tagged with how each
/// entry was obtained. Sealed tables are safe to share across threads.
class SequenceTable {
 public:
  SequenceTable(std::string name, long start) : name_(std::move(name)), start_(start) {}

  const std::string& name() const { return name_; }
  long start() const { return start_; }
  long last() const { return start_ + static_cast<long>(values_.size()) - 1; }
  bool empty() const { return values_.empty(); }
  bool has(long n) const { return n >= start_ && n <= last(); }

  const Integer& at(long n) const;
  Provenance provenance(long n) const;

  void push_back(Integer value, Provenance p);
  /// Fault-injection hook for negative tests: overwrite one existing value.
  void corrupt_value(long n, Integer value);

 private:
  size_t index(long n) const;
  std::string name_;
  long start_;
  std::vector<Integer> values_;
  std::vector<Provenance> prov_;
};

/// Consecutive quotients z_n / z_{n-1} of a positive sequence, reduced.
class QuotientTable {
 public:
  /// Throws std::invalid_argument if any table value is <= 0.
  static QuotientTable from(const SequenceTable& table);

  const std::string& base() const { return base_; }
  long start() const { return start_; }
  long last() const { return start_ + static_cast<long>(values_.size()) - 1; }
  bool has(long n) const { return n >= start_ && n <= last(); }
  const Rational& at(long n) const;

 private:
  QuotientTable(std::string base, long start) : base_(std::move(base)), start_(start) {}
  std::string base_;
  long start_;
  std::vector<Rational> values_;
};

/// Direct-summation table of S over [0, n_hi]. The parallel kernel computes
/// indices independently; the serial reference goes through BinomialCache.
SequenceTable build_S_table(long n_hi, ExecutionMode mode = ExecutionMode::Parallel);
SequenceTable build_S_table_reference(long n_hi);

SequenceTable build_f_table(long n_hi, ExecutionMode mode = ExecutionMode::Parallel);

/// u(n) = 4n * S(n), defined from an existing S table (starts at 0).
SequenceTable build_u_table(const SequenceTable& s_table, long n_hi);

/// Exact check of 4n*S(n) = (n+1)^2 f(n) - n^2 f(n-1) at one index (n >= 1;
/// at n = 0 both sides vanish).
bool check_companion_identity(const SequenceTable& s_table, const SequenceTable& f_table, long n);

}  // namespace logcert
