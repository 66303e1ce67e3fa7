#pragma once

#include <iosfwd>

namespace rtspan {

/// Exit codes of the `spanner` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitInvariantViolation = 3,
};

/// Entry point of the `spanner` command line tool (gen, build, verify, stats).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rtspan
