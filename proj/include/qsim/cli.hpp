#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsim::cli {

/// Runs the command-line driver. `args` excludes the program name.
/// Returns 0 on success, 2 on a usage error and 1 on an unexpected error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qsim::cli
