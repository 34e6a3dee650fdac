#pragma once

#include <iosfwd>

namespace linkhom::cli {

/// Process exit codes. No other values are returned.
enum ExitCode : int {
    kOk = 0,
    kConditionFailure = 1,
    kNotVectorBundle = 2,
    kInputError = 3,  // I/O, parse, usage
    kInternal = 4,
};

/// Runs one command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linkhom::cli
