#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace drd::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // computed result is "not feasible", "not minimal" or "theorem failed"
  kUsage = 2,     // bad arguments or unreadable input
};

/// Runs one `drd` command. `args` excludes the program name. Results go to
/// `out` as JSON (instance text for `gen`), diagnostics to `err`.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace drd::cli
