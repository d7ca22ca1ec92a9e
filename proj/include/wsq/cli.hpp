#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsq::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,   // the computation answered "no"
  kUsage = 2,      // bad flags or violated preconditions
  kInternal = 3,   // an internal invariant failed
};

/// Runs one command. `args` excludes the program name. Payload goes to `out`
/// (JSON, JSON-lines, or text with --format text), diagnostics to `err`;
/// `in` is read when a file argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wsq::cli
