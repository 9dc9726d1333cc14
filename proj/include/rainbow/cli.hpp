#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbow::cli {

enum ExitCode : int {
    ok = 0,
    verify_failed = 1,   // also internal verification failures
    precondition = 2,    // violated hypotheses and exceeded guards
    search_failed = 3,   // existence searches and routing
    usage = 64,          // bad arguments, unreadable or malformed input files
};

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
