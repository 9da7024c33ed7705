#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ngsplit::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kParseError = 2 };

/// Runs one command line (without the program name). Reads stdin from `in`
/// when no input path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ngsplit::cli
