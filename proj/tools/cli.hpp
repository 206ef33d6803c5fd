#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphpoly::cli {

/// Exit status: 0 success, 1 domain or validation error, 2 resource budget exceeded.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace graphpoly::cli
