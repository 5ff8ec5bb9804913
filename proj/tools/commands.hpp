#pragma once

#include <ostream>

namespace convexdim::cli {

/// Exit codes of run_cli.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,   // parse, validation or size-guard error
    kLawFailure = 3,   // some verification law failed
    kInternalError = 4 // an internal cross-check failed
};

/// Entry point of the `convexdim` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace convexdim::cli
