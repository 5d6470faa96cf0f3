#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaoskit::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kConvergenceError = 3 };

/// Runs one `chaoskit` invocation. `args` excludes the program name. Results
/// go to the file named by --output, or to `out` when it is absent or "-";
/// diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaoskit::cli
