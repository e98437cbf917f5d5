#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace idealpow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNotVerified = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idealpow::cli
