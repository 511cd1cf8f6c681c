#ifndef MREES_TOOLS_COMMANDS_HPP
#define MREES_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mrees::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,     // not closed, a verification suite failed, ...
  kInputError = 2,   // unreadable file, parse or validation error, bad flags
  kResourceCap = 3,  // enumeration or reduction caps
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mrees::cli

#endif
