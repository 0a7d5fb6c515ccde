#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace moore57::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudgetExceeded = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "1000000", "1e6" or "10^6".
std::uint64_t parse_count(std::string_view text);

}  // namespace moore57::cli
