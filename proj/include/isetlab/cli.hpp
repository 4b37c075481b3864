#pragma once

#include <iosfwd>

namespace isetlab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kParameterError = 1,
  kBudgetRefused = 2,
  kFalsified = 3,
};

/// Runs one CLI invocation, writing results to `out` (or --output) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isetlab::cli
