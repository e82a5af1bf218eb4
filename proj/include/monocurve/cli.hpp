#pragma once

#include <iosfwd>

namespace monocurve::cli {

/// Entry point shared by the monocurve binary and the tests. Writes reports
/// to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success (including empty scans), 1 when a scan or verify
/// run produced findings or failures, 2 for usage and domain errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace monocurve::cli
