#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathdet::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kResourceBound = 3,
};

// Runs one invocation. `args` excludes the program name. Normal output goes
// to `out`; errors are written to `err` as one JSON object per line,
// {"error": kind, "detail": text, ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathdet::cli
