#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weberseg {

// Command-line front end. args excludes the program name.
// Exit codes: 0 success, 1 data error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace weberseg
