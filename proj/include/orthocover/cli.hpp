#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthocover {

// Process exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInvalidInput = 2,
    kExitCapExceeded = 3,
    kExitInternal = 4,
};

// Runs the tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthocover
