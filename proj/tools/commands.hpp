#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h14::cli {

enum ExitCode : int { ok = 0, math_failure = 2, bad_input = 3 };

/// Parses argv and runs one subcommand. Reports go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace h14::cli
