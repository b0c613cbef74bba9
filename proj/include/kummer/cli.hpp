#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummer::cli {

/// Process exit statuses.
enum Exit : int {
    ok = 0,
    usage = 1,              // bad flags or values
    invalid_curve = 2,      // curve rejected
    invalid_place = 3,      // place or selection rejected, tuple length mismatch
    precondition = 4,       // family, construction or window constraints
    verify_mismatch = 5,    // oracle cross-check or verify harness disagreement
    internal = 6,           // unexpected failure
    overflow = 7,           // parameters too large for 64-bit arithmetic
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kummer::cli
