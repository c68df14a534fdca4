#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Cap on n for commands that enumerate partitions. PARTDIST_MAX_N may lower it.
inline constexpr int kExactMaxN = 60;

/// Runs one command line. args excludes the program name. Results go to out,
/// a single-line diagnostic to err on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partdist::cli
