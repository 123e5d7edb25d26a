#pragma once

#include <ostream>

namespace rc3bp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Parses argv and runs one subcommand. Never throws.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rc3bp::cli
