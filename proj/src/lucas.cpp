#include "lucasres/lucas.hpp"

#include <bit>
#include <string>

#include "lucasres/errors.hpp"

namespace lucasres {

LucasParams::LucasParams(BigInt A, BigInt B)
    : A_(std::move(A)), B_(std::move(B)), D_(B_ * B_ - 4 * A_) {}

LucasParams LucasParams::cubic_family(const BigInt& a) { return {a * a - a + 1, 2 - a}; }

LucasParams LucasParams::cubic_family_conjugate(const BigInt& a) { return {a * a + a + 1, a + 2}; }

LucasParams LucasParams::quartic_family(const BigInt& a) { return {a * a + 1, BigInt(2)}; }

LucasTerms lucas_terms(const LucasParams& params, std::size_t count) {
  LucasTerms terms;
  terms.u.reserve(count);
  terms.v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) {
      terms.u.emplace_back(0);
      terms.v.emplace_back(2);
    } else if (i == 1) {
      terms.u.emplace_back(1);
      terms.v.push_back(params.B());
    } else {
      terms.u.push_back(params.B() * terms.u[i - 1] - params.A() * terms.u[i - 2]);
      terms.v.push_back(params.B() * terms.v[i - 1] - params.A() * terms.v[i - 2]);
    }
  }
  return terms;
}

LucasPair lucas_pair(const LucasParams& params, std::uint64_t n) {
  BigInt u0 = 0, u1 = 1;
  BigInt v0 = 2, v1 = params.B();
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt u2 = params.B() * u1 - params.A() * u0;
    BigInt v2 = params.B() * v1 - params.A() * v0;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {n, std::move(u0), std::move(v0)};
}

std::pair<Residue, Residue> lucas_pair_mod(const LucasParams& params, std::uint64_t n,
                                           std::uint64_t modulus) {
  if (modulus < 2) raise(ErrorCode::InvalidArgument, "modulus must be at least 2");
  const std::uint64_t M = modulus;
  const std::uint64_t A = mod_u64(params.A(), M);
  const std::uint64_t B = mod_u64(params.B(), M);

  // (u_k, u_{k+1}), starting from k = 0 and walking the bits of n downward.
  std::uint64_t uk = 0;
  std::uint64_t uk1 = 1 % M;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    const std::uint64_t vk = submod(addmod(uk1, uk1, M), mulmod(B, uk, M), M);
    const std::uint64_t u2k = mulmod(uk, vk, M);
    const std::uint64_t u2k1 = submod(mulmod(uk1, uk1, M), mulmod(A, mulmod(uk, uk, M), M), M);
    if ((n >> bit) & 1) {
      uk = u2k1;
      uk1 = submod(mulmod(B, u2k1, M), mulmod(A, u2k, M), M);
    } else {
      uk = u2k;
      uk1 = u2k1;
    }
  }
  const std::uint64_t vn = submod(addmod(uk1, uk1, M), mulmod(B, uk, M), M);
  return {Residue(uk, M), Residue(vn, M)};
}

int lucas_epsilon(const LucasParams& params, std::uint64_t p) { return legendre(params.D(), p); }

Residue lucas_u_quotient(const LucasParams& params, std::uint64_t index, std::uint64_t p) {
  require_odd_prime_range(p);
  return divide_by_p(lucas_pair_mod(params, index, p * p).first, p);
}

Residue lucas_v_quotient(const LucasParams& params, std::uint64_t index, const BigInt& offset,
                         std::uint64_t p) {
  require_odd_prime_range(p);
  const std::uint64_t p2 = p * p;
  return divide_by_p(lucas_pair_mod(params, index, p2).second - Residue(offset, p2), p);
}

Residue lucas_quotient_mod_p(const LucasParams& params, std::uint64_t p) {
  require_odd_prime_range(p);
  if (divides(p, params.A()))
    raise(ErrorCode::HypothesisViolation, "p = " + std::to_string(p) + " divides A = " + to_string(params.A()));
  const int eps = lucas_epsilon(params, p);
  if (eps == 0)
    raise(ErrorCode::HypothesisViolation, "p = " + std::to_string(p) + " divides D = " + to_string(params.D()));
  return lucas_u_quotient(params, eps == 1 ? p - 1 : p + 1, p);
}

}  // namespace lucasres
