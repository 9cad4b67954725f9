#pragma once

#include <iosfwd>

namespace ladderlab::cli {

/// Runs one command line and returns the process exit status:
/// 0 on success, 1 on a numeric failure, 2 on a usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ladderlab::cli
