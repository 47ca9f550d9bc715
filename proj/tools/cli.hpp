#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace needleboard::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kContract = 2 };

// args[0] is the program name. Reports go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace needleboard::cli
