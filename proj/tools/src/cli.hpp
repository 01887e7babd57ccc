#pragma once

#include <iosfwd>

namespace causalql::cli {

/// Exit codes: 0 success, 1 I/O or syntax, 2 semantic violation, 3 bound.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_violation = 2;
inline constexpr int exit_bound = 3;

/// Runs one command. The JSON report goes to `out` (or --output), diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace causalql::cli
