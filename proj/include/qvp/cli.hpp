#pragma once

#include <ostream>

namespace qvp {

/// Exit codes: 0 success or certified, 1 hypothesis finding, 2 invalid input
/// or usage, 3 internal consistency failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qvp
