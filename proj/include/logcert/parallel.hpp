#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace logcert {

/// Serial runs the plain reference loop; Parallel runs the OpenMP kernel
/// (identical results by construction, reduced to the minimum index).
enum class ExecutionMode { Serial, Parallel };

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

inline void atomic_min(std::atomic<long>& slot, long value) {
  long cur = slot.load(std::memory_order_relaxed);
  while (value < cur && !slot.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace detail

/// Smallest n in [lo, hi] where pred(n) is false, if any. The parallel path
/// skips indices beyond an already-found violation, which cannot mask an
/// earlier one, so both paths return the same index.
template <typename Pred>
std::optional<long> find_first_violation(long lo, long hi, Pred&& pred,
                                         ExecutionMode mode = ExecutionMode::Parallel) {
  if (lo > hi) return std::nullopt;
  if (mode == ExecutionMode::Serial) {
    for (long n = lo; n <= hi; ++n)
      if (!pred(n)) return n;
    return std::nullopt;
  }
  constexpr long kNone = INT64_MAX;
  std::atomic<long> best{kNone};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long n = lo; n <= hi; ++n) {
    if (n >= best.load(std::memory_order_relaxed)) continue;
    if (!pred(n)) detail::atomic_min(best, n);
  }
  long found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

/// Tri-state range scan for checks that can also come out indeterminate.
struct ScanOutcome {
  std::optional<long> first_fail;
  std::optional<long> first_indeterminate;
};

enum class ScanResult { Ok, Violation, Indeterminate };

template <typename Fn>
ScanOutcome scan_range(long lo, long hi, Fn&& fn, ExecutionMode mode = ExecutionMode::Parallel) {
  ScanOutcome out;
  if (lo > hi) return out;
  constexpr long kNone = INT64_MAX;
  std::atomic<long> fail{kNone}, indet{kNone};
  auto body = [&](long n) {
    switch (fn(n)) {
      case ScanResult::Ok: break;
      case ScanResult::Violation: detail::atomic_min(fail, n); break;
      case ScanResult::Indeterminate: detail::atomic_min(indet, n); break;
    }
  };
  if (mode == ExecutionMode::Serial) {
    for (long n = lo; n <= hi; ++n) {
      if (fail.load() != kNone) break;  // minimal witness already fixed
      body(n);
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long n = lo; n <= hi; ++n) {
      if (n >= fail.load(std::memory_order_relaxed)) continue;
      body(n);
    }
  }
  if (fail.load() != kNone) out.first_fail = fail.load();
  if (indet.load() != kNone && (!out.first_fail || indet.load() < *out.first_fail))
    out.first_indeterminate = indet.load();
  return out;
}

}  // namespace logcert
