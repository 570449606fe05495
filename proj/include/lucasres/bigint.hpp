#ifndef LUCASRES_BIGINT_HPP
#define LUCASRES_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace lucasres {

using BigInt = mpz_class;

static_assert(std::is_same_v<std::int64_t, long> && std::is_same_v<std::uint64_t, unsigned long>,
              "gmpxx conversions below assume an LP64 platform");

/// Parses an optionally signed decimal integer. Throws InvalidArgument.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& x);

BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Canonical representative of x in [0, modulus).
std::uint64_t mod_u64(const BigInt& x, std::uint64_t modulus);

bool fits_u64(const BigInt& x);
bool fits_i64(const BigInt& x);

/// Converts or throws InvalidArgument naming `what`.
std::uint64_t to_u64(const BigInt& x, std::string_view what);
std::int64_t to_i64(const BigInt& x, std::string_view what);

/// True when p divides x (p > 0).
bool divides(std::uint64_t p, const BigInt& x);

}  // namespace lucasres

#endif  // LUCASRES_BIGINT_HPP
