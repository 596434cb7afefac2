#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhydro::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kFitDomain = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (without the program name) writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 15 significant digits; the JSON writer then prints the shortest
/// representation, so equal inputs give byte-identical documents.
double round15(double value);

}  // namespace qhydro::cli
