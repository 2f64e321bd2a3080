#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace funcut::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumeric = 3 };

/// Runs the funcut command line with structured output on `out` and the
/// human-readable summary and warnings on `diag`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &diag);

} // namespace funcut::cli
