#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hrht {

// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_error = 1,       // usage, parse or precondition failure
  exit_infeasible = 2,  // no strongly stable matching / no forced-edge augmentation
};

// Runs one command. `args` excludes the program name.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrht
