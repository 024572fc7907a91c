#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linca::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFalsified = 1,
  kUsage = 2,
  kOracleDisagreement = 3,
  kIncomparableSeeds = 4,
};

/// Runs one `linca` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linca::cli
