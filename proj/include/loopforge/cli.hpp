#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopforge {

// Command-line entry point, callable in-process for tests. `args` are the
// arguments in natural order, without the program name. Exit codes:
// 0 success (or SAT), 1 property-check failure or UNSAT, 2 usage/input
// error, 3 search budget exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace loopforge
