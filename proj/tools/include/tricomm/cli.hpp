#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricomm::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one `tricomm` invocation. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tricomm::cli
