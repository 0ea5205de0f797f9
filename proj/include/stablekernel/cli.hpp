#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablekernel::cli {

enum ExitCode : int {
    kOk = 0,
    kCertificationFailed = 1,
    kDomainError = 2,
    kNoConvergence = 3,
};

/// Runs the command line `args` (without the program name). CSV goes to `out` unless --out is
/// given; diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablekernel::cli
