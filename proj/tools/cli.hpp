#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walklab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one invocation. args[0] is the program name. Reports go to `out`
/// when no --out file is given; diagnostics go to `err`.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// WALKLAB_THREADS: unset means hardware concurrency, 0 means serial.
unsigned thread_budget();

} // namespace walklab::cli
