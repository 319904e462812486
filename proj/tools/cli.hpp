#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2chain::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  /// Checked and found invalid, or an oracle suite failed.
  kInvalid = 1,
  /// Malformed or inadmissible input.
  kBadInput = 2,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2chain::cli
