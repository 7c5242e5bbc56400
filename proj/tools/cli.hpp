#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mahh::cli {

/// Exit statuses of the mahh-lab command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs one command line (args exclude the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mahh::cli
