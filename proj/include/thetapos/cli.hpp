#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetapos::cli {

/// Runs one CLI invocation; output (JSON or table) goes to `out`, diagnostics
/// to `err`. Returns the process exit code: 0 success / affirmative verdict,
/// 1 domain error or negative verdict, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetapos::cli
