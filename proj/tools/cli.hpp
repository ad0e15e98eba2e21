#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hermsos::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  /// No certificate was produced, or the given one failed verification.
  kNoCertificate = 2,
  /// f takes a negative value on the unit sphere.
  kHypothesisViolated = 3,
};

/// Runs one command line (args[0] is the program name). Results go to
/// `out` unless -o names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermsos::cli
