#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srlab::cli {

enum ExitCode : int {
  ok = 0,
  counterexample = 1,
  usage = 2,
  resource_cap = 3,
  internal = 4,
};

// Runs one command line (without the program name). Reports go to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srlab::cli
