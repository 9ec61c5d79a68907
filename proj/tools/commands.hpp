#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgnsr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSolver = 3;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// files or `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgnsr::cli
