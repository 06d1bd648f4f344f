#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holonomy::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kNotCyclic = 2,
  kNodal = 3,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// reports to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holonomy::cli
