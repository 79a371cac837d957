#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace bbflow::cli
