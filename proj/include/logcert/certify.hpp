#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcert/checkers.hpp"

namespace logcert {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "logcert-report/1";

struct CertifyConfig {
  long values_hi = 500;           // sequence tables S, f, u
  long recurrence_hi = 300;       // residual checks
  long ratio_hi = 300;            // quotient-level checks
  long root_increasing_hi = 200;  // exact n-th-root increase
  long root_exact_hi = 60;        // exact power comparisons for root log-concavity
  long root_interval_hi = 300;    // certified-interval root log-concavity
  long precision_bits = 4096;     // enclosure ladder cap
  Rational ratio_gap_threshold = Rational(1, 100);
  std::vector<std::string> claim_filter;  // empty selects every claim
  ExecutionMode execution = ExecutionMode::Parallel;
  /// Fault injection for negative tests: overwrite S at one index before
  /// any derived table is built.
  std::optional<std::pair<long, Integer>> corrupt_S;

  PrecisionLadder ladder() const {
    return PrecisionLadder{std::min(128L, precision_bits), precision_bits};
  }
};

struct ClaimResult {
  std::string id;
  std::string description;
  long n_lo = 0, n_hi = 0;
  Verdict verdict;
  std::vector<SubVerdict> details;
  double duration_ms = 0;
};

struct CertificationReport {
  std::string schema = kReportSchema;
  std::string tool_version = kToolVersion;
  CertifyConfig config;
  std::vector<std::string> scope_notes;
  std::vector<ClaimResult> claims;
  VerdictKind overall = VerdictKind::Pass;
  double total_ms = 0;
};

/// Shared read-only inputs built once before the claims execute.
struct SharedTables {
  SequenceTable S{"S", 0};
  SequenceTable f{"f", 0};
  SequenceTable u{"u", 0};
  std::optional<QuotientTable> quotients;
};

SharedTables build_shared_tables(const CertifyConfig& config);

struct ClaimSpec {
  std::string id;
  std::string description;
  bool needs_tables = true;
  std::function<ClaimResult(const SharedTables*, const CertifyConfig&)> run;
};

/// The full registry, ordered C1..C12.
const std::vector<ClaimSpec>& claim_registry();

/// Executes the (filtered) registry. Individual claim errors are recorded
/// as indeterminate results, never aborting the suite. Throws
/// std::invalid_argument for an unknown claim id in the filter.
CertificationReport run_claims(const CertifyConfig& config);

enum class ReportFormat { Json, Text, Csv };

/// Renders a report. JSON is deterministic byte-for-byte for a fixed config
/// except for the segregated "timings" object; text and CSV carry no timing
/// data at all.
std::string render_report(const CertificationReport& report, ReportFormat format);

/// 0 all pass, 1 any fail, 2 any indeterminate.
int exit_code_for(const CertificationReport& report);

const char* to_string(VerdictKind kind);

}  // namespace logcert
