#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wreath {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitParse = 2, kExitMissingData = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace wreath
