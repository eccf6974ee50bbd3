#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace alphaconv::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes of run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

/// Parses args (without the program name), runs one subcommand and writes
/// the JSON (or CSV) report to out; diagnostics and the one-line summary go
/// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphaconv::cli
