#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asym::cli {

enum ExitCode : int {
    success = 0,
    input_error = 1,  // malformed input, invalid gauge, failed campaign
    precondition_error = 2,
    internal_error = 3,  // a self-check tripped
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asym::cli
