#pragma once

#include <iosfwd>

namespace toeplitz {

/// Command-line entry point. Exit codes: 0 success, 1 input error, 2 numerical failure.
/// Primary artifacts go to `out` unless --out names a directory; messages go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toeplitz
