#pragma once

#include <iosfwd>

namespace jroots::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kRealRoot = 0,
  kOk = 0,
  kAlmostReal = 1,
  kSelftestMismatch = 1,
  kOther = 2,
  kUsage = 3,
  kResourceLimit = 4,
};

/// Runs the command line front end; output is written to `out` in one piece
/// once the command has finished.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jroots::cli
