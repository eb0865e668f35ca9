#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cosmo/report.hpp"

namespace cosmo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand (check, enumerate, simulate, bound, sweep). The report
// goes to `out` unless --out names a file; diagnostics and the resolved
// configuration go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Builders behind the subcommands, exposed for tests.
struct CheckResult {
  Table table;
  bool all_passed = false;
};
CheckResult run_check_suite(unsigned n_max, unsigned oracle_n_max);

}  // namespace cosmo::cli
