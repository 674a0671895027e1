#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistzhu::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (without the program name), writing the result to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistzhu::cli
