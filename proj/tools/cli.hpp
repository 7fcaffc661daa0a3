#pragma once

#include <iosfwd>

namespace brickwang::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnsolvable = 2;

/// Runs the `brickwang` command line. Exit codes: 0 success, 2 a
/// legitimately unsolvable board, 1 usage, I/O or parse errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brickwang::cli
