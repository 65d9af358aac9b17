#pragma once

#include <iosfwd>

namespace bjq::cli {

// Parses argv and runs one subcommand. Returns the process exit code:
// 0 on success, 2 for rejected input, 1 when a computation fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bjq::cli
