#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multifan::cli {

/// Subcommands in the order the help text lists them.
const std::vector<std::string>& commands();

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status:
///   0 success, 1 usage, 2 malformed input, 3 violated precondition,
///   4 failed verification or a check that came out false, 5 unsupported.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace multifan::cli
