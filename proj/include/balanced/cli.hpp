#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace balanced::cli {

// Full command-line driver, callable in-process for tests. `args` excludes
// the program name. Exit codes: 0 success, 1 domain error (machine-readable
// {"error": ...} on out), 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace balanced::cli
