#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhb::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kAssertionFailed = 2,
  kResourceRefused = 3,
};

/// Environment variable holding the default search budget (--budget wins).
inline constexpr const char* kBudgetEnv = "QHB_BUDGET";

/// Runs the qhb command line. args[0] is the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhb::cli
