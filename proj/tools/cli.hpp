#pragma once

#include <iosfwd>

namespace edvlab::cli {

/// Runs one command line. Returns 0 on success, 2 when the input is
/// rejected, 1 when an internal check fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace edvlab::cli
