#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsig {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kInternalError = 3 };

/// Runs one command line (without the program name). Results go to out,
/// a single-line diagnostic to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsig
