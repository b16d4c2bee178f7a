#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bjcalc::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kComputation = 2, kVerificationFailed = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bjcalc::cli
