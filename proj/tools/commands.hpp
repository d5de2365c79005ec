#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringpat::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs the ringpat command line with args excluding the program name.
/// Results go to `out` (unless --out names a file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringpat::cli
