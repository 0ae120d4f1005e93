#pragma once

#include <iosfwd>

namespace hsi {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Command-line entry point; JSON (or the --pretty summary) goes to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsi
