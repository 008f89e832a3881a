#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratpart::cli {

/// Stable exit codes.
enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    parse_error = 2,
    not_applicable = 3,
    verification_failed = 4,
    not_zero_avoiding = 5,
    not_input_altering = 6,
    bound_too_small = 7,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ratpart::cli
