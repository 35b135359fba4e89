#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cjp::cli {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Colors given as "2..20", "2,3,5" or "4".
std::vector<int> parse_colors(const std::string& text);

/// The whole command line: jones, degree, verify, bracket.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cjp::cli
