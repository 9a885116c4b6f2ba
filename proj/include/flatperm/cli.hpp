#pragma once

#include <string>
#include <vector>

namespace flatperm::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Outcome {
  int exit_code = kOk;
  /// Rendered data; empty when --out redirected it to a file.
  std::string out;
  /// Diagnostics and help text.
  std::string err;
};

/// Runs one command. args excludes the program name. The brute-force cap is
/// kDefaultEnumerationCap unless FLATPERM_MAX_N is set.
Outcome run(const std::vector<std::string>& args);

}  // namespace flatperm::cli
