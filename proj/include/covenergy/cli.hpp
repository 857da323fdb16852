#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covenergy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitCounterexample = 3;

/// Runs one `cover-energy` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace covenergy::cli
