#ifndef LUCASRES_POLYSEQ_HPP
#define LUCASRES_POLYSEQ_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lucasres/bigint.hpp"
#include "lucasres/report.hpp"

namespace lucasres {

/// Dense integer polynomial, coefficients in ascending degree. The highest
/// stored coefficient is nonzero; the zero polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  /// x + c
  static IntPoly linear(const BigInt& c);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero past the degree.
  BigInt coeff(std::size_t i) const;
  BigInt leading() const;

  BigInt evaluate(const BigInt& x) const;
  IntPoly pow(unsigned exponent) const;

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator*(const BigInt& scalar) const;

  bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// G_0 = 1, G_{n+1} = (x-1)^2 G_n + a^{2n+1} (x + a - 1).
IntPoly poly_G(std::uint64_t n, const BigInt& a);

/// Q_0 = 1, Q_{n+1} = (x-1)^2 Q_n + a^{2n+2}.
IntPoly poly_Q(std::uint64_t n, const BigInt& a);

/// Coefficient identities of G_n (n >= 1), divisions checked in multiplied form.
CheckReport check_G_coeffs(std::uint64_t n, const BigInt& a);

/// Coefficient identities of Q_n (n >= 1), divisions checked in multiplied form.
CheckReport check_Q_coeffs(std::uint64_t n, const BigInt& a);

}  // namespace lucasres

#endif  // LUCASRES_POLYSEQ_HPP
