#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sb::cli {

/// Runs the command line with args excluding the program name. Writes one
/// JSON document to `out` (or to --out FILE) on success and messages to `err`.
/// Exit codes: 0 success, 1 precondition violation, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sb::cli
