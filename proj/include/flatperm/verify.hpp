#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatperm/permutation.hpp"
#include "flatperm/series.hpp"

namespace flatperm {

enum class Suite { Oracle, Refined, ClosedForms, Series, Bijections, Identities, All };

std::string_view name(Suite s);
std::optional<Suite> parse_suite(std::string_view text);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// What was compared, or the first counterexample on failure.
  std::string detail;
  /// Non-blocking checks report documented discrepancies; they never fail a run.
  bool blocking = true;
};

struct VerifyOptions {
  /// Largest n for anything compared against brute force.
  int n_max = 8;
  /// Largest n for recurrence-only identities.
  int recurrence_n_max = 40;
  std::size_t order = kDefaultSeriesOrder;
  int brute_cap = kDefaultEnumerationCap;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// True when every blocking check passed.
  bool ok() const;
};

/// Runs one suite (or all of them). Throws CapExceeded when n_max exceeds
/// brute_cap.
VerifyReport run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace flatperm
