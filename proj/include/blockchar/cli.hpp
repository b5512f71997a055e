#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockchar {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the command line with `args` (program name excluded), writing the
/// result to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockchar
