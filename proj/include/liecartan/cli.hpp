#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liecartan {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
  kExitInternalInconsistency = 3,
};

/// Entry point of the `liecartan` command line tool. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecartan
