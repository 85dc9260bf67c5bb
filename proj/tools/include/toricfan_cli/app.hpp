#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricfan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // invalid fan, failed cocycle or certificate
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable or malformed input

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toricfan::cli
