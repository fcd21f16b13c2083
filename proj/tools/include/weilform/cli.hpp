#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace weilform::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and usage text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct StepResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The level-12 walkthrough behind `weilform reproduce`. Throws
/// weilform::Error for an unsupported n1.
std::vector<StepResult> run_reproduce(std::int64_t n1, std::int64_t prec);

}  // namespace weilform::cli
