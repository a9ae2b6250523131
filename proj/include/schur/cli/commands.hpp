#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitParse = 3;

/// Runs `schur <args...>` (args exclude the program name) and returns the
/// exit code. Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur::cli
