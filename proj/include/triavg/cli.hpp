#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triavg {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or the --out file) and diagnostics to `err`. Returns the exit
/// status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triavg
