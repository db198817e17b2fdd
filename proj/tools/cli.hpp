#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace insets::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInvalidInput = 2 };

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "2,3,2", "2x5" (five blocks of size 2) or mixes like "1,2x3".
/// An empty string means no main blocks.
std::vector<std::int64_t> parseBlocks(const std::string& text);

}  // namespace insets::cli
