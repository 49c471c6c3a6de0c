#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace timcoop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace timcoop::cli
