#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccswb::cli {

// Exit codes.
inline constexpr int kSuccess = 0;       // holds / equivalent / ok
inline constexpr int kNegative = 1;      // fails / inequivalent
inline constexpr int kUsageError = 2;    // usage, parse or semantic error
inline constexpr int kLimitError = 3;    // state limit or unguarded recursion

// `args` excludes the program name, e.g. {"eq", "bb84.ccs", "BB84", "Spec"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccswb::cli
