#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entropic::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMustHoldFailed = 1,
    kExitUsage = 2,
    kExitError = 3,
};

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace entropic::cli
