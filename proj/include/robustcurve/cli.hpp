#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robustcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Environment fallback for --threads.
inline constexpr const char* kThreadsEnv = "ROBUSTCURVE_THREADS";

/// Subcommands: generate, curve, dataset, eval, stats, bench.
/// Returns kExitOk, kExitUsage (bad flags or parameter values) or kExitData
/// (unreadable or malformed input, IO failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace robustcurve::cli
