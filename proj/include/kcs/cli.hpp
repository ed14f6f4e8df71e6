#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kcs {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_usage = 2 };

/// Runs one kcs command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcs
