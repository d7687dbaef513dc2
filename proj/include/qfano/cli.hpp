#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qfano::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;          // success / Certified / check passed
inline constexpr int kExitError = 1;       // parse or usage error
inline constexpr int kExitNotCoprime = 2;  // certify: canonical stability on a wall
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitBudget = 4;      // enumeration budget exceeded
inline constexpr int kExitMismatch = 5;    // family disagreement or failed check

// Runs the command line `args` (args[0] is the program name), writing the
// JSON report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfano::cli
