#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cqm::cli {

enum ExitCode : int {
    kTrue = 0,
    kFalse = 1,
    kUnknown = 2,
    kUsage = 64,
};

/// Runs one command line (without the program name). Exit codes: 0 for
/// true/yes/solved, 1 for false/no/unsolved, 2 for unknown or an exhausted
/// budget, 64 for usage and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cqm::cli
