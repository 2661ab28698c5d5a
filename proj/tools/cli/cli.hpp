#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace escrate::cli {

enum ExitCode : int { ok = 0, usage = 1, forbidden_word = 2, no_positive_root = 3, cap_exceeded = 4 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace escrate::cli
