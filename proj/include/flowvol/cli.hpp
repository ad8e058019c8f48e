#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flowvol::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kFalsified = 3;

// Runs one subcommand (args excludes the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowvol::cli
