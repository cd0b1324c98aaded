#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copsrob::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kRuntimeError = 2;
inline constexpr int kSuiteFailure = 3;

/// Runs the command line `args` (without the program name) against the
/// given streams and returns the exit code.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace copsrob::cli
