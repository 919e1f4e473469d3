#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turanlab {

// Full command-line driver, separated from main() so tests can invoke it
// in-process. Returns the process exit code: 0 success, 1 verify violation,
// 2 usage/config error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace turanlab
