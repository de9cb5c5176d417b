#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smoothap::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCapacity = 2, kInvariant = 3 };

// Runs one command line (without the program name). Data goes to out,
// diagnostics and progress to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smoothap::cli
