#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circsolve::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_input_error = 2,
    exit_singular = 3,
};

/// Runs the command line `circsolve <args...>`. Results go to `out` (or the
/// file named by -o), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace circsolve::cli
