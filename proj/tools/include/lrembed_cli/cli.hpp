#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrembed::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrembed::cli
