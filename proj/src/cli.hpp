#pragma once

#include <iosfwd>

namespace psg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPeriodNotFound = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Parses and executes one invocation. Normal output goes to `out`, messages
/// to `err`; the return value is the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psg::cli
