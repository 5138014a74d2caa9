#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexgb::cli {

/// Runs one command line (without the program name handling: args[0] is the
/// program name). Exit status: 0 success, 1 a verification check failed,
/// 2 invalid configuration or unreadable input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lexgb::cli
