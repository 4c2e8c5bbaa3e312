#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command line (without the program name). `in` backs the `-` path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cgt::cli
