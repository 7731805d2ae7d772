#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace impsep {

// Exit codes shared by every subcommand.
inline constexpr int kExitSuccess = 0;  // success or YES
inline constexpr int kExitNo = 1;       // NO
inline constexpr int kExitError = 2;    // usage, parse or infeasibility error

/// Runs the command-line front end on args (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace impsep
