#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamdirac::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_none = 1;
inline constexpr int exit_usage = 2;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hamdirac::cli
