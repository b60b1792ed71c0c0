#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indep::cli {

/// Exit codes: 0 = success or affirmative decision, 1 = negative decision,
/// 2 = usage or input error.
enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indep::cli
