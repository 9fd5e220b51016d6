#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqdepth {

// Exit codes: 0 success / holds, 2 invalid input, 3 verification failure,
// 4 budget timeout.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;
inline constexpr int kExitTimeout = 4;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqdepth
