#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumgrowth::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes the
/// report to `out` or to the --out file. Errors go to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumgrowth::cli
