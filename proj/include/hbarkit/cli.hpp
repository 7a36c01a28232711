#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbarkit {

enum ExitCode : int { kExitOk = 0, kExitComputation = 1, kExitUsage = 2 };

/// Runs one CLI invocation (argv[0] is the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a computation error and
/// 2 on a usage or parse error.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace hbarkit
