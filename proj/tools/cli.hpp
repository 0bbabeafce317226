#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mbetti::cli {

/// Exit codes of run().
enum Exit : int {
  kOk = 0,
  /// A domain error kept the command from producing a report.
  kDomainError = 1,
  /// Bad flags, unreadable files, malformed input.
  kUsageError = 2,
};

/// Runs the command line given without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbetti::cli
