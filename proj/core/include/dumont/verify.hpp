#pragma once

#include "dumont/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

// must_pass checks gate the exit status; informational checks record the
// published statements whose expansions disagree with the enumeration oracle
// (misprints are reported, never silently corrected); out_of_scope entries
// keep the multivariate refinements visible — their content is exercised
// through the univariate statistic slices instead.
enum class CheckTier { must_pass, informational, out_of_scope };
enum class CheckStatus { pass, mismatch, skipped };

std::string_view to_string(CheckTier t);
std::string_view to_string(CheckStatus s);

// First disagreement found: the coefficient index n plus both exact values,
// rendered as decimal strings.
struct CheckMismatch {
  int n = 0;
  std::string oracle;
  std::string formula;

  friend bool operator==(const CheckMismatch&, const CheckMismatch&) = default;
};

struct CheckResult {
  std::string id;
  std::string paper_anchor; // human-readable statement of the claim checked
  CheckTier tier = CheckTier::must_pass;
  CheckStatus status = CheckStatus::pass;
  int n_max = 0; // depth the check actually ran at
  std::optional<CheckMismatch> mismatch;
  long long runtime_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  int pass = 0;
  int mismatch = 0;
  int skipped = 0;

  // False only when a must_pass check mismatched.
  bool all_must_pass_ok() const;
  // { "checks": [ { "id", "paper_anchor", "tier", "status", "n_max",
  //   "mismatch": {"n","oracle","formula"} | null, "runtime_ms" } ],
  //   "summary": { "pass", "mismatch", "skipped" } }
  std::string to_json() const;
  // One line per check plus a summary, for terminals.
  std::string to_text() const;
};

// Stable ids of every registered check, in registry order.
std::vector<std::string> check_ids();
bool is_known_check(const std::string& id);

// Runs one check, comparing oracle counts against formula coefficients for
// every n <= n_max (checks with a narrower stated range skip the rest).
// Throws std::invalid_argument for unknown ids and propagates enumeration
// bound errors.
CheckResult run_check(const std::string& id, int n_max);

// Runs every check at min(n_max, its default depth). Checks are independent;
// `threads` > 1 runs them concurrently with a deterministic report order.
VerificationReport run_all(int n_max, int threads = 1);

} // namespace dumont
