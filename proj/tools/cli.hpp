#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irbar::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckMismatch = 1,
  kUsage = 2,
  kSingular = 3,
  kNoConvergence = 4,
};

/// Runs one command; `args` excludes the program name. A matrix path of "-"
/// reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace irbar::cli
