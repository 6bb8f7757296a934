#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hallmod::cli {

/* Runs one command line (without the program name). Reports go to `out` unless
   --output names a file; diagnostics go to `err`. Returns 0 when everything
   passed, 1 when some check failed, 2 for invalid input. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallmod::cli
