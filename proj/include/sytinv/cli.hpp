#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sytinv {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitVerificationFailed = 2 };

/// Runs the command line `args` (without the program name). `in` backs
/// `--input -` and a missing `--input`. Never throws on user input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sytinv
