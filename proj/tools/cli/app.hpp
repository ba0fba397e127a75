#pragma once

#include <iosfwd>

namespace thz::cli {

/// Exit codes: 0 success, 1 computation domain error, 2 config/resolution
/// error (including bad flags).
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitConfig = 2;

/// Full command-line entry point; output goes to `out` unless --out is given.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thz::cli
