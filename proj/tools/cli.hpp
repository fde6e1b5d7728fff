#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace einject {

// Runs one command. `args` excludes the program name. Returns the exit status:
// 0 success, 1 failed verification or check, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace einject
