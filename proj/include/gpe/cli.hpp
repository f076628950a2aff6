#pragma once

#include <string>
#include <vector>

namespace gpe::cli {

/// Exit codes: 0 success, 1 usage or argument error, 2 instability abort.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInstability = 2;

/// Runs the command-line front end (subcommands: simulate, converge, bench).
/// argv excludes the program name.
int run(const std::vector<std::string>& argv);

}  // namespace gpe::cli
