#include "int_list.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Canonical text: no leading '+', no leading zeros, no "-0".
std::string canonical(std::string_view s) {
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  if (s == "0") negative = false;
  return (negative ? "-" : "") + std::string(s);
}

std::int64_t parse_i64(std::string_view s, std::string_view item) {
  if (!is_integer(s)) throw std::invalid_argument("bad integer '" + std::string(s) + "' in '" + std::string(item) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("range end out of range in '" + std::string(item) + "'");
  return v;
}

}  // namespace

bool is_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '-') return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> parse_int_list(std::string_view text, std::size_t max_items) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](std::string v) {
    if (seen.insert(v).second) out.push_back(std::move(v));
    if (out.size() > max_items) throw std::invalid_argument("integer list is too long");
  };
  text = trim(text);
  if (text.empty()) return out;
  for (;;) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw std::invalid_argument("empty item in integer list");
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      if (!is_integer(item)) throw std::invalid_argument("bad integer '" + std::string(item) + "'");
      add(canonical(item));
    } else {
      const std::int64_t lo = parse_i64(trim(item.substr(0, dots)), item);
      const std::int64_t hi = parse_i64(trim(item.substr(dots + 2)), item);
      if (lo > hi) throw std::invalid_argument("empty range '" + std::string(item) + "'");
      if (static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) >= max_items)
        throw std::invalid_argument("range '" + std::string(item) + "' is too long");
      for (std::int64_t v = lo;; ++v) {
        add(std::to_string(v));
        if (v == hi) break;
      }
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace cli
