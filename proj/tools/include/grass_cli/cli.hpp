#pragma once

#include <string>
#include <vector>

namespace grass::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 a check failed or an operator could not be
/// reconstructed, 2 usage error.
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; args excludes the program name.
Result run(const std::vector<std::string>& args);

}  // namespace grass::cli
