#pragma once

#include <ostream>

namespace kaestner::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// Entry point shared by the binary and the tests. Normal output goes to
/// `out`, diagnostics and usage text to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kaestner::cli
