#ifndef LUCASRES_COMBSUM_HPP
#define LUCASRES_COMBSUM_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lucasres/bigint.hpp"

namespace lucasres {

/// Identifies the residue-class sum over k = r (mod m) of C(n,k) a^k.
/// r is stored normalized into [0, m).
struct SumSpec {
  std::uint64_t n;
  std::uint64_t m;
  std::uint64_t r;
  BigInt a;

  /// Validates n >= 1 and m >= 1 (InvalidArgument) and normalizes r.
  static SumSpec make(std::uint64_t n, std::uint64_t m, const BigInt& r, const BigInt& a);
};

enum class Strategy { Direct, Recur, Closed };

const char* strategy_name(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name);

/// Row enumeration. This is the oracle for every other strategy.
BigInt residue_sum_direct(const SumSpec& spec);

/// (1+a)^n, plus (-1)^r (1-a)^n when m is even.
BigInt delta_offset(const SumSpec& spec);

/// m [n r]_m(a) - delta_offset.
BigInt delta_direct(const SumSpec& spec);

/// Delta_m(r, n) from the linear recurrence whose coefficients are G_{(m-1)/2}
/// (m odd) or Q_{m/2-1} (m even). Throws UnsupportedModulus for m < 3.
BigInt delta_recur(const SumSpec& spec);

/// Delta_m(r, 1..n_max) by the same recurrence (index 0 holds n = 1).
std::vector<BigInt> delta_recur_series(std::uint64_t m, std::uint64_t r, const BigInt& a,
                                       std::uint64_t n_max);

BigInt delta_closed3(const BigInt& r, std::uint64_t n, const BigInt& a);
BigInt delta_closed4(const BigInt& r, std::uint64_t n, const BigInt& a);
/// Throws ZeroA when a = 0.
BigInt delta_closed6(const BigInt& r, std::uint64_t n, const BigInt& a);
/// Delta_3(r, n) at a = 2.
BigInt delta3_a2(const BigInt& r, std::uint64_t n);

/// Dispatches on m in {3, 4, 6} (UnsupportedModulus otherwise). m = 3 with
/// a = 2 goes through delta3_a2.
BigInt delta_closed(const SumSpec& spec);

/// Delta_m(r, n) by the chosen strategy. m in {1, 2} gives 0 for the recur and
/// closed strategies.
BigInt delta(const SumSpec& spec, Strategy strategy);

/// [n r]_m(a) by the chosen strategy; recur/closed reconstruct it from Delta.
BigInt residue_sum(const SumSpec& spec, Strategy strategy);

}  // namespace lucasres

#endif  // LUCASRES_COMBSUM_HPP
