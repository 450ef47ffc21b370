#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ternlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceError = 3,
};

/// Runs one ternlab command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ternlab::cli
