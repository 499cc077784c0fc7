#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace s2re::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNoRotator = 1,
    kInputError = 2,
    kNumericalFailure = 3,
};

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace s2re::cli
