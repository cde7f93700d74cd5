#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liftenum {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitBadInput = 3;

/// Runs one command line (without the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liftenum
