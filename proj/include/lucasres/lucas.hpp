#ifndef LUCASRES_LUCAS_HPP
#define LUCASRES_LUCAS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lucasres/bigint.hpp"
#include "lucasres/modular.hpp"

namespace lucasres {

/// (A, B) with u_{n+1} = B u_n - A u_{n-1}; the discriminant D = B^2 - 4A is
/// fixed at construction.
class LucasParams {
 public:
  LucasParams(BigInt A, BigInt B);

  const BigInt& A() const noexcept { return A_; }
  const BigInt& B() const noexcept { return B_; }
  const BigInt& D() const noexcept { return D_; }

  /// A = a^2 - a + 1, B = 2 - a: the sequence behind Delta_3.
  static LucasParams cubic_family(const BigInt& a);
  /// A = a^2 + a + 1, B = a + 2: the second companion sequence of Delta_6.
  static LucasParams cubic_family_conjugate(const BigInt& a);
  /// A = a^2 + 1, B = 2: the sequence behind Delta_4.
  static LucasParams quartic_family(const BigInt& a);

  bool operator==(const LucasParams& rhs) const { return A_ == rhs.A_ && B_ == rhs.B_; }

 private:
  BigInt A_;
  BigInt B_;
  BigInt D_;
};

struct LucasPair {
  std::uint64_t index = 0;
  BigInt u;
  BigInt v;
};

/// u_0..u_count-1 and v_0..v_count-1 by direct iteration of the recurrence.
struct LucasTerms {
  std::vector<BigInt> u;
  std::vector<BigInt> v;
};
LucasTerms lucas_terms(const LucasParams& params, std::size_t count);

/// Exact (u_n, v_n) by iteration.
LucasPair lucas_pair(const LucasParams& params, std::uint64_t n);

/// (u_n mod M, v_n mod M) by fast doubling, O(log n) steps.
std::pair<Residue, Residue> lucas_pair_mod(const LucasParams& params, std::uint64_t n,
                                           std::uint64_t modulus);

/// (D/p).
int lucas_epsilon(const LucasParams& params, std::uint64_t p);

/// u_index / p mod p, where u_index is evaluated mod p^2. Throws
/// InternalDivisibilityFailure if p does not divide u_index.
Residue lucas_u_quotient(const LucasParams& params, std::uint64_t index, std::uint64_t p);

/// (v_index - offset) / p mod p, evaluated through the p^2 path.
Residue lucas_v_quotient(const LucasParams& params, std::uint64_t index, const BigInt& offset,
                         std::uint64_t p);

/// The Lucas quotient u_{p-eps}/p mod p. Requires p ∤ A·D (HypothesisViolation).
Residue lucas_quotient_mod_p(const LucasParams& params, std::uint64_t p);

}  // namespace lucasres

#endif  // LUCASRES_LUCAS_HPP
