#ifndef DPART_CLI_HPP
#define DPART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dpart::cli {

/// Exit codes: 0 success, 1 computational failure or mismatch, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

/// Runs the command line `args` (args[0] is the program name). JSON or
/// human-readable text goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpart::cli

#endif  // DPART_CLI_HPP
