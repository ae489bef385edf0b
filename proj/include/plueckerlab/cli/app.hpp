#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plab::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kUnsupported = 3, kContract = 4 };

/// Runs `plueckerlab <args...>` writing the report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plab::cli
