#ifndef ANTIPOWER_TOOLS_COMMANDS_HPP
#define ANTIPOWER_TOOLS_COMMANDS_HPP

#include <iosfwd>

namespace antipower::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapExceeded = 3;
inline constexpr int kBudgetExhausted = 4;

/// Runs the antipower command line with the given arguments (argv[0] is the
/// program name) and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace antipower::cli

#endif  // ANTIPOWER_TOOLS_COMMANDS_HPP
