#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fi1::cli {

// Runs one command line (args[0] is the program name). Returns 0 on success,
// 2 on malformed input or domain errors, 1 on internal errors.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace fi1::cli
