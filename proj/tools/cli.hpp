#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pencil::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit status: 0 on success, 1 when a verification or self-test
/// finds a mismatch, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  unsigned long long seed = 1;
  unsigned samples = 200;
};

/// Randomized invariant suites; prints one line per suite and returns the
/// number of failing suites.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace pencil::cli
