#pragma once

#include <iosfwd>

namespace splab {

/// Exit codes: 0 success, 1 counterexample or internal failure, 2 bad input,
/// 3 unknown verification suite.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splab
