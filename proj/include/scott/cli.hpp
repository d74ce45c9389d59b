#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scott {

// Runs the command line `args` (without the program name). Results go to
// `out` (or to --out PATH), diagnostics to `err`. Returns the exit status:
// 0 on success, nonzero iff an error was reported.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace scott
