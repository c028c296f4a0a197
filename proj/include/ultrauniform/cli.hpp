#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultrauniform::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (args[0] is the program name). JSON results go to
/// `out` (or the --out file), diagnostics to `err`. Returns 0 on success or a
/// true verdict, 1 on a false verdict, 2 on malformed input or a violated
/// precondition.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ultrauniform::cli
