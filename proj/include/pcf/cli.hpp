#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1; ///< a verification or bound predicate failed
inline constexpr int kExitUsage = 2;  ///< bad flags, unreadable or malformed input

/// Runs one command line. `args` includes the program name. "-" as a path
/// means `in` (for inputs) or `out` (for outputs).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pcf
