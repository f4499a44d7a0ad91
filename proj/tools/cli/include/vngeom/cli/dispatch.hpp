#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vngeom::cli {

/// Exit codes: 0 success, 1 domain error, 2 malformed input or bad usage.
enum ExitCode : int { kOk = 0, kDomainError = 1, kMalformed = 2 };

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vngeom::cli
