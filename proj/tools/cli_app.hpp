#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betticone::cli {

// Runs the command line tool on the given arguments (without the program
// name). Returns the process exit code: 0 success, 1 usage or input-format
// problems, 2 domain errors (table outside the cone, bad chains, size
// bounds), 3 unexpected internal failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace betticone::cli
