#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apoly::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kMath = 3,
};

/// Runs one `apoly` invocation. `args` excludes the program name. JSON goes
/// to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apoly::cli
