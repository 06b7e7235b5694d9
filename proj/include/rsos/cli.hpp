#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rsos {

enum ExitCode : int { exit_ok = 0, exit_false = 1, exit_usage = 2, exit_limit = 3 };

/// Runs the command line `rsos <args...>`; results go to out, diagnostics to
/// err. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsos
