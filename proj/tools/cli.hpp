#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dirichlet::cli {

/// Exit codes: 0 success, 1 verification failure, 2 domain or usage error.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirichlet::cli
