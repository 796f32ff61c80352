#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relhur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). The document goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relhur::cli
