/*
 * cli.hpp -- command-line front end: eval, sweep, fig1, check.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

// Parses the argument vector (without argv[0]) and runs the requested
// command, writing results to `out` and messages to `err`.
//
// Exit codes: 0 success; 2 usage / validation error; 3 convergence
// failure in eval; 4 sweep completed with failed grid points; 5 one or
// more consistency checks failed.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace casimir::cli
