#pragma once

#include <iosfwd>

namespace minrank::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kCapRefused = 2,
    kMismatch = 3,
};

// Entry point of the `minrank` tool; writes reports to `out` and diagnostics
// to `err` and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minrank::cli
