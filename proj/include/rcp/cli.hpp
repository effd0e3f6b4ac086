#pragma once

#include <iosfwd>

namespace rcp::cli {

inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. Data goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a property check fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcp::cli
