#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace severi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args[0] is the program name). Exit 0 on success,
/// 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi::cli
