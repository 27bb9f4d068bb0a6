#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moran {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRegime = 3;

/// Runs one command line. args excludes the program name. The record goes to
/// out only when the whole command succeeded; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moran
