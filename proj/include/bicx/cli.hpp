#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicx {

/// Exit codes: 0 success, 1 failed check or numerical error, 2 configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

/// Runs the command line `args` (args[0] is the program name) with subcommands
/// verify, transform, frft, kernel and mehler.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicx
