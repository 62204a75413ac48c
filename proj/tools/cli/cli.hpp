#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hnerve/invariants.hpp"

namespace hnerve::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kUsage = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows N_1..N_d, columns H̃_0..H̃_{d-1} and χ, then a footnote with the
/// nonzero entries at i = -1 or j = d+1.
std::string render_nerve_table(const NerveTable& table, const Field& field);

}  // namespace hnerve::cli
