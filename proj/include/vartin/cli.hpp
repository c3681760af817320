#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vartin::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success, 1 invalid input, 2 undecided or unsupported, 3 internal
/// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vartin::cli
