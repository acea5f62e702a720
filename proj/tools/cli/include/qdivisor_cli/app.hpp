#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdivisor::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kVerificationFailed = 2,
    kInvariantBreach = 3,
};

/// Environment variable naming the default scan cache directory.
inline constexpr const char* kCacheEnv = "QDIVISOR_LAB_CACHE";

/// Entry point of qdivisor-lab; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qdivisor::cli
