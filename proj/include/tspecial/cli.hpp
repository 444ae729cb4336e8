#pragma once

// Command-line front end. dispatch() parses argv (without the program name),
// writes data to `out` and diagnostics to `err`, and returns one of the exit
// codes below.

#include <iosfwd>
#include <string>
#include <vector>

namespace tspecial::cli {

inline constexpr int kExitOk = 0;
// Bad arguments, or inputs outside a function's domain.
inline constexpr int kExitUsage = 1;
// Accuracy not reached or a fit that diverged.
inline constexpr int kExitNumerical = 2;

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspecial::cli
