#pragma once

#include <iosfwd>

namespace protosel::cli {

/// Exit codes: 0 success, 1 runtime failure, 2 usage or validation error.
enum ExitCode : int { kOk = 0, kRuntimeError = 1, kUsageError = 2 };

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace protosel::cli
