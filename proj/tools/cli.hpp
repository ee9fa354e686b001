#pragma once

#include <iosfwd>

namespace vel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the in-process tests. Returns
/// 0 on success, 1 when a verification claim fails, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vel::cli
