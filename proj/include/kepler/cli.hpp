#pragma once

#include <iosfwd>

namespace kepler {

/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kepler
