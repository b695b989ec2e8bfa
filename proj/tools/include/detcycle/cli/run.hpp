#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace detcycle::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

// Parses `args` (without the program name), dispatches the command and
// writes its report to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detcycle::cli
