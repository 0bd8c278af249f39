#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stacky {

// Dispatches one command (args exclude the program name) and writes the JSON
// report to out, diagnostics to err.  Returns the process exit code:
// 0 success, 1 bad input or invalid fan, 2 computation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stacky
