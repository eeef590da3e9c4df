#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitCounterexample = 4;

/// Runs one `latmax` command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latmax::cli
