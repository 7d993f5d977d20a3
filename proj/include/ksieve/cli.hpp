#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksieve::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_format = 3;
inline constexpr int exit_domain = 4;
inline constexpr int exit_budget = 5;
inline constexpr int exit_proven_mismatch = 6;

inline constexpr const char* version = "0.3.0";

/// Runs one subcommand. `args` excludes the program name. Graph JSON is read
/// from `in` and written to `out` whenever no path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace ksieve::cli
