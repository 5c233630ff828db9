#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nlh::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns kPass, kFail or kUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlh::cli
