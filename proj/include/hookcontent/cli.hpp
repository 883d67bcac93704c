#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcf::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kBudgetExceeded = 3,
    kOracleMismatch = 4,
};

/// Runs the hookc command line. `args` excludes the program name. Data goes
/// to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hcf::cli
