#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace germcalc::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kNotStabilized = 2,
    kInternalError = 3,
};

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germcalc::cli
