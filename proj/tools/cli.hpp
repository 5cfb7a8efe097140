#pragma once

#include <ostream>

namespace ohara::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand,
/// writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ohara::cli
