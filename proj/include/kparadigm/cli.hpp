#pragma once

#include <iosfwd>

namespace kparadigm::cli {

enum ExitCode : int { kOk = 0, kEmpty = 1, kDataError = 2 };

/// Runs the command line in-process. Exit codes: 0 success, 1 empty result or
/// not found, 2 data or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kparadigm::cli
