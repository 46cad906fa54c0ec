#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ferrers::cli {

enum ExitCode : int {
  kPass = 0,
  kCounterexample = 1,
  kUsage = 2,
  kDataInvariant = 3,
};

/// Hard cap on n for enumeration commands.
inline constexpr int kMaxN = 12;

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ferrers::cli
