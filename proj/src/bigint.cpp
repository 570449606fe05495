#include "lucasres/bigint.hpp"

#include <limits>

#include "lucasres/errors.hpp"

namespace lucasres {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) raise(ErrorCode::InvalidArgument, "expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9')
      raise(ErrorCode::InvalidArgument, "expected an integer, got '" + std::string(text) + "'");
  }
  BigInt value(std::string(digits), 10);
  return negative ? BigInt(-value) : value;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::uint64_t mod_u64(const BigInt& x, std::uint64_t modulus) {
  return mpz_fdiv_ui(x.get_mpz_t(), modulus);
}

bool fits_u64(const BigInt& x) { return x.fits_ulong_p(); }
bool fits_i64(const BigInt& x) { return x.fits_slong_p(); }

std::uint64_t to_u64(const BigInt& x, std::string_view what) {
  if (!fits_u64(x))
    raise(ErrorCode::InvalidArgument, std::string(what) + " must be in [0, 2^64), got " + to_string(x));
  return x.get_ui();
}

std::int64_t to_i64(const BigInt& x, std::string_view what) {
  if (!fits_i64(x))
    raise(ErrorCode::InvalidArgument, std::string(what) + " does not fit a signed 64-bit integer: " + to_string(x));
  return x.get_si();
}

bool divides(std::uint64_t p, const BigInt& x) { return mpz_divisible_ui_p(x.get_mpz_t(), p) != 0; }

}  // namespace lucasres
