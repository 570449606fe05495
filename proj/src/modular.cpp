#include "lucasres/modular.hpp"

#include <string>

#include "lucasres/errors.hpp"

namespace lucasres {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % modulus);
}

std::uint64_t addmod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus) {
  const std::uint64_t s = x + y;
  return (s < x || s >= modulus) ? s - modulus : s;
}

std::uint64_t submod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus) {
  return x >= y ? x - y : x + (modulus - y);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1) result = mulmod(result, base, modulus);
    base = mulmod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

namespace {

void require_modulus(std::uint64_t modulus) {
  if (modulus < 2) raise(ErrorCode::InvalidArgument, "modulus must be at least 2");
}

// Inverse of x modulo m for reduced x, or 0 when gcd(x, m) > 1.
std::uint64_t inverse_or_zero(std::uint64_t x, std::uint64_t m) {
  __int128 old_r = x, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return 0;
  old_s %= static_cast<__int128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

}  // namespace

Residue::Residue(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  require_modulus(modulus);
  value_ = value % modulus;
}

Residue::Residue(const BigInt& value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  require_modulus(modulus);
  value_ = mod_u64(value, modulus);
}

std::int64_t Residue::centered() const noexcept {
  if (value_ > modulus_ / 2) return -static_cast<std::int64_t>(modulus_ - value_);
  return static_cast<std::int64_t>(value_);
}

void Residue::require_same_modulus(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_)
    raise(ErrorCode::InvalidArgument, "residue moduli differ: " + std::to_string(modulus_) + " vs " +
                                          std::to_string(rhs.modulus_));
}

Residue Residue::operator+(const Residue& rhs) const {
  require_same_modulus(rhs);
  return {addmod(value_, rhs.value_, modulus_), modulus_};
}

Residue Residue::operator-(const Residue& rhs) const {
  require_same_modulus(rhs);
  return {submod(value_, rhs.value_, modulus_), modulus_};
}

Residue Residue::operator*(const Residue& rhs) const {
  require_same_modulus(rhs);
  return {mulmod(value_, rhs.value_, modulus_), modulus_};
}

Residue Residue::operator-() const { return {submod(0, value_, modulus_), modulus_}; }

Residue Residue::inverse() const {
  const std::uint64_t inv = inverse_or_zero(value_, modulus_);
  if (inv == 0)
    raise(ErrorCode::NotInvertible,
          std::to_string(value_) + " is not invertible modulo " + std::to_string(modulus_));
  return {inv, modulus_};
}

Residue Residue::pow(std::uint64_t exponent) const { return {powmod(value_, exponent, modulus_), modulus_}; }

void require_odd_prime_range(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p > kMaxPrime)
    raise(ErrorCode::InvalidArgument,
          "p must be an odd prime in [3, 2^32), got " + std::to_string(p));
}

int legendre(const BigInt& x, std::uint64_t p) {
  require_odd_prime_range(p);
  const std::uint64_t e = powmod(mod_u64(x, p), (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

Residue inv_mod(const BigInt& x, std::uint64_t modulus) {
  return Residue(x, modulus).inverse();
}

Residue fermat_quotient(std::uint64_t p, const BigInt& x) {
  require_odd_prime_range(p);
  if (divides(p, x))
    raise(ErrorCode::HypothesisViolation, "q_p(x) needs p ∤ x; p = " + std::to_string(p) + ", x = " + to_string(x));
  const std::uint64_t p2 = p * p;
  const Residue power = Residue(x, p2).pow(p - 1);
  return divide_by_p(power - Residue(1, p2), p);
}

Residue divide_by_p(const Residue& value_mod_p2, std::uint64_t p) {
  if (value_mod_p2.modulus() != p * p)
    raise(ErrorCode::InvalidArgument, "divide_by_p expects a residue modulo p^2");
  if (value_mod_p2.value() % p != 0)
    raise(ErrorCode::InternalDivisibilityFailure,
          std::to_string(value_mod_p2.value()) + " is not divisible by " + std::to_string(p));
  return {value_mod_p2.value() / p, p};
}

std::uint64_t normalize_class(const BigInt& r, std::uint64_t m) {
  if (m == 0) raise(ErrorCode::InvalidArgument, "m must be positive");
  return mod_u64(r, m);
}

Residue k_sum(std::uint64_t p, std::uint64_t m, const BigInt& r, const BigInt& a) {
  require_odd_prime_range(p);
  const std::uint64_t cls = normalize_class(r, m);
  std::uint64_t k = cls == 0 ? m : cls;
  const std::uint64_t neg_a = mod_u64(BigInt(-a), p);
  std::uint64_t term = powmod(neg_a, k, p);
  const std::uint64_t step = powmod(neg_a, m, p);
  std::uint64_t sum = 0;
  while (k <= p - 1) {
    sum = addmod(sum, mulmod(term, inverse_or_zero(k, p), p), p);
    term = mulmod(term, step, p);
    if (m > p - 1 - k) break;
    k += m;
  }
  return {sum, p};
}

}  // namespace lucasres
