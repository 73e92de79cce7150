#pragma once

#include <iosfwd>

namespace finhankel::cli {

enum ExitCode : int {
    ok = 0,
    internal_failure = 1,
    parse_failure = 2,
    tolerance_failure = 3,
    hypothesis_violation = 4,
};

/// Entry point of the `finhankel` tool. Output goes to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finhankel::cli
