#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

/// Runs the tdom command line. `args` excludes the program name. Inputs
/// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tdom::cli
