#pragma once

#include <iosfwd>

namespace ftspanner::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 bad usage or
/// unreadable input.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftspanner::cli
