#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hmstab {

/// Exit codes: 0 all checks pass, 1 a computed value disagrees with its
/// closed form, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a" or "a..b" into an inclusive, nonempty list.
std::vector<std::int64_t> parse_range(const std::string& text);

}  // namespace hmstab
