#pragma once

#include <ostream>

namespace alphacalc {

/// Runs the command line front end. Documents go to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on malformed input and 2 when a
/// mathematical precondition fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alphacalc
