#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace quadpoly {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns the process exit code; usage errors go to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace quadpoly
