#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace juliadiff {

/// Exit codes of the command-line surface.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Environment variable scaling the grid and sample-point caps (mebibytes).
inline constexpr const char* kMemoryCapEnv = "JULIADIFF_MEMORY_CAP_MB";

/// Runs one subcommand (`bounds`, `cover`, `diff`, `oracle`, `verify`).
/// `args` excludes the program name. Errors go to `err` prefixed with `error:`.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace juliadiff
