#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unigraph::cli {

inline constexpr const char* kToolName = "unigraph";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kCertified = 0, kExcluded = 1, kUndecided = 2, kUsage = 3, kCapacity = 4 };

/// args excludes the program name. Reports go to out, diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unigraph::cli
