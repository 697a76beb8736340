#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpec::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kViolation = 1,
    kInfeasible = 2,
    kBudget = 3,
    kParse = 4,
    kSearchExhausted = 5,
};

/// Runs one command line (args[0] is the program name). Reports go to `out` unless redirected
/// with --out; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vpec::cli
