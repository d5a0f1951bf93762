#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fstrand::cli {

// Runs one command line (without the program name).  Returns the process exit
// code: 0 on success, 1 on domain errors, 2 on parse and usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fstrand::cli
