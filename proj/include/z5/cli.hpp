#pragma once

#include <iosfwd>

namespace z5 {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,        // usage, parse or precondition error
    kExitObstruction = 2,  // certificate, FAIL, no alpha, invalid graph, not in the family
    kExitDefect = 3,       // a constructive algorithm broke its own contract
};

/// Runs one subcommand; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace z5
