#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dosc {

// Runs the command line; args excludes the program name.
// Exit codes: 0 success, 1 numerical failure, 2 argument error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dosc
