#pragma once

#include <ostream>

namespace stablekac::cli {

/// Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs the command line with the given arguments (argv[0] is the program
/// name), writing results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stablekac::cli
