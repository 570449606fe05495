#include "lucasres/polyseq.hpp"

#include <algorithm>
#include <string>

#include "lucasres/errors.hpp"

namespace lucasres {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt sign(std::uint64_t exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

// (x - 1)^2
const IntPoly& x_minus_one_squared() {
  static const IntPoly poly{BigInt(1), BigInt(-2), BigInt(1)};
  return poly;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::linear(const BigInt& c) { return IntPoly(std::vector<BigInt>{c, BigInt(1)}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result = constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const BigInt& scalar) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return IntPoly(std::move(out));
}

IntPoly poly_G(std::uint64_t n, const BigInt& a) {
  IntPoly g = IntPoly::constant(1);
  for (std::uint64_t k = 0; k < n; ++k)
    g = x_minus_one_squared() * g + IntPoly::linear(a - 1) * lucasres::pow(a, 2 * k + 1);
  return g;
}

IntPoly poly_Q(std::uint64_t n, const BigInt& a) {
  IntPoly q = IntPoly::constant(1);
  for (std::uint64_t k = 0; k < n; ++k)
    q = x_minus_one_squared() * q + IntPoly::constant(lucasres::pow(a, 2 * k + 2));
  return q;
}

CheckReport check_G_coeffs(std::uint64_t n, const BigInt& a) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "check_G_coeffs needs n >= 1");
  const IntPoly g = poly_G(n, a);
  const auto b = [&](std::uint64_t s) { return g.coeff(s); };

  CheckReport report;
  report.check_id = "poly_g_coeffs";
  report.a = a;
  report.detail = "n=" + std::to_string(n);
  report.clauses.push_back(Clause::exact("degree = 2n", BigInt(static_cast<long>(g.degree())),
                                         BigInt(static_cast<unsigned long>(2 * n))));
  report.clauses.push_back(Clause::exact("(a+1) b_0 = a^(2n+1) + 1", (a + 1) * b(0),
                                         lucasres::pow(a, 2 * n + 1) + 1));
  report.clauses.push_back(Clause::exact("b_2n = 1", b(2 * n), BigInt(1)));
  for (std::uint64_t s = 1; s <= 2 * n - 1; ++s) {
    report.clauses.push_back(Clause::exact("b_(s-1) - (a+1) b_s, s=" + std::to_string(s),
                                           b(s - 1) - (a + 1) * b(s), binomial(2 * n + 1, s) * sign(s + 1)));
  }
  // The printed range stops at 2n-1; the x^{2n} coefficient gives the same
  // identity at s = 2n and is reported on its own.
  Clause boundary = Clause::exact("b_(s-1) - (a+1) b_s, boundary s=2n", b(2 * n - 1) - (a + 1) * b(2 * n),
                                  binomial(2 * n + 1, 2 * n) * sign(2 * n + 1));
  boundary.note = "outside the printed range 1 <= s <= 2n-1";
  report.clauses.push_back(std::move(boundary));
  return report;
}

CheckReport check_Q_coeffs(std::uint64_t n, const BigInt& a) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "check_Q_coeffs needs n >= 1");
  const IntPoly q = poly_Q(n, a);
  const auto c = [&](std::uint64_t s) { return q.coeff(s); };
  const BigInt a2 = a * a;

  CheckReport report;
  report.check_id = "poly_q_coeffs";
  report.a = a;
  report.detail = "n=" + std::to_string(n);
  report.clauses.push_back(Clause::exact("degree = 2n", BigInt(static_cast<long>(q.degree())),
                                         BigInt(static_cast<unsigned long>(2 * n))));
  report.clauses.push_back(
      Clause::exact("(a^2-1) c_0 = a^(2n+2) - 1", (a2 - 1) * c(0), lucasres::pow(a, 2 * n + 2) - 1));
  report.clauses.push_back(Clause::exact("2 c_0 + (a^2-1) c_1 = 2n+2", 2 * c(0) + (a2 - 1) * c(1),
                                         BigInt(static_cast<unsigned long>(2 * n + 2))));
  report.clauses.push_back(
      Clause::exact("c_(2n-1) = -2n", c(2 * n - 1), -BigInt(static_cast<unsigned long>(2 * n))));
  report.clauses.push_back(Clause::exact("c_2n = 1", c(2 * n), BigInt(1)));
  for (std::uint64_t s = 2; s + 2 <= 2 * n; ++s) {
    report.clauses.push_back(Clause::exact("c_(s-2) - 2 c_(s-1) + (1-a^2) c_s, s=" + std::to_string(s),
                                           c(s - 2) - 2 * c(s - 1) + (1 - a2) * c(s),
                                           binomial(2 * n + 2, s) * sign(s)));
  }
  return report;
}

}  // namespace lucasres
