#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subshift::cli {

/// Exit codes: 0 success, 1 a check failed, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace subshift::cli
