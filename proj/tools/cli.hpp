#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlcn::cli {

// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // calibration check failed, or an unexpected internal error
  kUsage = 2,
  kGeneration = 3,
  kIo = 4,
};

// Entry point for `mlcn_sim <run|calibrate|fixtures> [flags]`. `args`
// excludes the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlcn::cli
