#ifndef LUCASRES_TOOLS_INT_LIST_HPP
#define LUCASRES_TOOLS_INT_LIST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cli {

/// Decimal integer text with an optional sign; no range limit.
bool is_integer(std::string_view s);

std::optional<std::uint64_t> parse_u64(std::string_view s);

/// "1,2,5", "-5..5", "-3..-1,7". Range ends must fit in 64 bits; single items
/// may be arbitrarily large. Items come back in the order given, expanded,
/// without duplicates. Throws std::invalid_argument on malformed input.
std::vector<std::string> parse_int_list(std::string_view text, std::size_t max_items = 1000000);

}  // namespace cli

#endif  // LUCASRES_TOOLS_INT_LIST_HPP
