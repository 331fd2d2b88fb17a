// Command-line front end, exposed as a function so tests can drive it
// in-process: subcommands tob, construct, validate, distance, sweep,
// span-dump. Exit codes: 0 ok (MATCH / WITHIN_BOUNDS / NOT_COVERED),
// 1 distance MISMATCH, 2 usage / parse / validation error, 3 capacity.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace u3c::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// `args` excludes the program name: {"sweep", "--sigma", "2", ...}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace u3c::cli
