#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace incol {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  ///< a check or verification failed, or a precondition did not hold
  kExitUsage = 2,   ///< bad arguments, unreadable file or parse error
  kExitCap = 3,     ///< a size, budget or work cap was hit
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incol
