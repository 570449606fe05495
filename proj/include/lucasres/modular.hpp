#ifndef LUCASRES_MODULAR_HPP
#define LUCASRES_MODULAR_HPP

#include <cstdint>

#include "lucasres/bigint.hpp"

namespace lucasres {

/// Largest odd prime bound for which p^2 still fits a 64-bit modulus.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus);
std::uint64_t addmod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus);
std::uint64_t submod(std::uint64_t x, std::uint64_t y, std::uint64_t modulus);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Value in [0, modulus) together with its modulus. Arithmetic between two
/// residues requires equal moduli.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);
  Residue(const BigInt& value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Signed representative in (-modulus/2, modulus/2].
  std::int64_t centered() const noexcept;

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const;
  Residue& operator+=(const Residue& rhs) { return *this = *this + rhs; }
  Residue& operator-=(const Residue& rhs) { return *this = *this - rhs; }
  Residue& operator*=(const Residue& rhs) { return *this = *this * rhs; }

  Residue inverse() const;
  Residue pow(std::uint64_t exponent) const;

  bool operator==(const Residue&) const = default;

 private:
  void require_same_modulus(const Residue& rhs) const;

  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// Throws InvalidArgument unless p is odd, at least 3 and at most kMaxPrime.
/// Primality itself is a documented precondition, not checked here.
void require_odd_prime_range(std::uint64_t p);

/// Legendre symbol (x/p) by Euler's criterion, in {-1, 0, 1}.
int legendre(const BigInt& x, std::uint64_t p);

/// x^{-1} mod `modulus` via the extended Euclidean algorithm. Throws NotInvertible.
Residue inv_mod(const BigInt& x, std::uint64_t modulus);

/// q_p(x) = (x^{p-1} - 1)/p reduced mod p; evaluated mod p^2 then divided.
/// Throws HypothesisViolation when p | x.
Residue fermat_quotient(std::uint64_t p, const BigInt& x);

/// Exact quotient value/p of a residue mod p^2, returned mod p. Throws
/// InternalDivisibilityFailure when p does not divide the value.
Residue divide_by_p(const Residue& value_mod_p2, std::uint64_t p);

/// r reduced into [0, m).
std::uint64_t normalize_class(const BigInt& r, std::uint64_t m);

/// K_{p,m,r}(a): sum over 1 <= k <= p-1 with k = r (mod m) of (-a)^k / k, mod p.
Residue k_sum(std::uint64_t p, std::uint64_t m, const BigInt& r, const BigInt& a);

}  // namespace lucasres

#endif  // LUCASRES_MODULAR_HPP
