#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sofic2::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 for success or YES, 1 for NO, 2 for errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sofic2::cli
