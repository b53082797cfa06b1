#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pflight::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (simulate, estimate, density, moments, fisher, mc).
/// `args` excludes the program name. Output goes to `out` unless --out is
/// given; diagnostics go to `err`, runtime failures as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker-thread count after applying the PFL_THREADS cap (0 or unset = no cap).
std::size_t effective_threads(std::size_t requested);

}  // namespace pflight::cli
