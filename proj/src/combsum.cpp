#include "lucasres/combsum.hpp"

#include <string>

#include "lucasres/errors.hpp"
#include "lucasres/lucas.hpp"
#include "lucasres/polyseq.hpp"

namespace lucasres {

namespace {

void require_positive_n(std::uint64_t n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "Delta_m(r, n) is defined for n >= 1");
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    raise(ErrorCode::InexactDivision, to_string(numerator) + " is not divisible by " + to_string(denominator));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

}  // namespace

SumSpec SumSpec::make(std::uint64_t n, std::uint64_t m, const BigInt& r, const BigInt& a) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "n must be at least 1");
  if (m < 1) raise(ErrorCode::InvalidArgument, "m must be at least 1");
  return SumSpec{n, m, normalize_class(r, m), a};
}

const char* strategy_name(Strategy s) noexcept {
  switch (s) {
    case Strategy::Direct: return "direct";
    case Strategy::Recur: return "recur";
    case Strategy::Closed: return "closed";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "direct") return Strategy::Direct;
  if (name == "recur") return Strategy::Recur;
  if (name == "closed") return Strategy::Closed;
  return std::nullopt;
}

BigInt residue_sum_direct(const SumSpec& spec) {
  // term = C(n, k) a^k, advanced by the exact step * (n - k + 1) * a / k.
  BigInt term = 1;
  BigInt sum = spec.r == 0 ? BigInt(1) : BigInt(0);
  for (std::uint64_t k = 1; k <= spec.n; ++k) {
    term *= spec.n - k + 1;
    term *= spec.a;
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), k);
    if (k % spec.m == spec.r) sum += term;
  }
  return sum;
}

BigInt delta_offset(const SumSpec& spec) {
  BigInt offset = pow(1 + spec.a, spec.n);
  if (spec.m % 2 == 0) {
    const BigInt other = pow(1 - spec.a, spec.n);
    offset += spec.r % 2 == 0 ? other : BigInt(-other);
  }
  return offset;
}

BigInt delta_direct(const SumSpec& spec) {
  require_positive_n(spec.n);
  return BigInt(static_cast<unsigned long>(spec.m)) * residue_sum_direct(spec) - delta_offset(spec);
}

std::vector<BigInt> delta_recur_series(std::uint64_t m, std::uint64_t r, const BigInt& a,
                                       std::uint64_t n_max) {
  if (m < 3)
    raise(ErrorCode::UnsupportedModulus, "the recurrence needs m >= 3 (Delta_1 = Delta_2 = 0), got m = " +
                                             std::to_string(m));
  require_positive_n(n_max);
  r %= m;
  const IntPoly coeffs = m % 2 == 1 ? poly_G((m - 1) / 2, a) : poly_Q(m / 2 - 1, a);
  const std::uint64_t order = m % 2 == 1 ? m - 1 : m - 2;

  std::vector<BigInt> series;
  series.reserve(n_max);
  for (std::uint64_t n = 1; n <= std::min(order, n_max); ++n)
    series.push_back(delta_direct(SumSpec{n, m, r, a}));
  // Monic: Delta(n + order) = -sum_{s < order} coeff_s Delta(n + s).
  while (series.size() < n_max) {
    const std::size_t base = series.size() - order;
    BigInt next = 0;
    for (std::uint64_t s = 0; s < order; ++s) next -= coeffs.coeff(s) * series[base + s];
    series.push_back(std::move(next));
  }
  return series;
}

BigInt delta_recur(const SumSpec& spec) {
  return delta_recur_series(spec.m, spec.r, spec.a, spec.n).back();
}

BigInt delta_closed3(const BigInt& r, std::uint64_t n, const BigInt& a) {
  require_positive_n(n);
  const LucasTerms t = lucas_terms(LucasParams::cubic_family(a), n + 2);
  const BigInt& un = t.u[n];
  const BigInt& un1 = t.u[n + 1];
  switch (normalize_class(r, 3)) {
    case 0: return 2 * un1 - (2 - a) * un;
    case 1: return -un1 + (a + 1) * un;
    default: return -un1 - (2 * a - 1) * un;
  }
}

BigInt delta_closed4(const BigInt& r, std::uint64_t n, const BigInt& a) {
  require_positive_n(n);
  const LucasTerms t = lucas_terms(LucasParams::quartic_family(a), n + 2);
  const BigInt& un = t.u[n];
  const BigInt& un1 = t.u[n + 1];
  switch (normalize_class(r, 4)) {
    case 0: return 2 * un1 - 2 * un;
    case 1: return 2 * a * un;
    case 2: return -(2 * un1 - 2 * un);
    default: return -2 * a * un;
  }
}

BigInt delta_closed6(const BigInt& r, std::uint64_t n, const BigInt& a) {
  require_positive_n(n);
  if (a == 0) raise(ErrorCode::ZeroA, "the m = 6 closed forms divide by a; a must be nonzero");
  const LucasTerms big = lucas_terms(LucasParams::cubic_family_conjugate(a), n + 1);
  const LucasTerms small = lucas_terms(LucasParams::cubic_family(a), n + 1);
  const BigInt& Vn = big.v[n];
  const BigInt& Vn1 = big.v[n - 1];
  const BigInt& vn = small.v[n];
  const BigInt& vn1 = small.v[n - 1];
  const BigInt plus = a * a + a + 1;
  const BigInt minus = a * a - a + 1;
  switch (normalize_class(r, 6)) {
    case 0: return Vn + vn;
    case 1: return exact_div(-Vn + plus * Vn1 - vn + minus * vn1, a);
    case 2: return exact_div(-(a + 1) * Vn + plus * Vn1 - (a - 1) * vn - minus * vn1, a);
    case 3: return -Vn + vn;
    case 4: return exact_div(Vn - plus * Vn1 - vn + minus * vn1, a);
    default: return exact_div((a + 1) * Vn - plus * Vn1 - (a - 1) * vn - minus * vn1, a);
  }
}

BigInt delta3_a2(const BigInt& r, std::uint64_t n) {
  require_positive_n(n);
  const std::uint64_t cls = normalize_class(r, 3);
  if (n % 2 == 1) {
    const BigInt t = pow(BigInt(-3), (n + 1) / 2);
    if (cls == 0) return 0;
    return cls == 1 ? BigInt(-t) : t;
  }
  const BigInt t = pow(BigInt(-3), n / 2);
  return cls == 0 ? BigInt(2 * t) : BigInt(-t);
}

BigInt delta_closed(const SumSpec& spec) {
  const BigInt r(static_cast<unsigned long>(spec.r));
  switch (spec.m) {
    case 3: return spec.a == 2 ? delta3_a2(r, spec.n) : delta_closed3(r, spec.n, spec.a);
    case 4: return delta_closed4(r, spec.n, spec.a);
    case 6: return delta_closed6(r, spec.n, spec.a);
    default:
      raise(ErrorCode::UnsupportedModulus,
            "closed forms exist for m in {3, 4, 6}, got m = " + std::to_string(spec.m));
  }
}

BigInt delta(const SumSpec& spec, Strategy strategy) {
  require_positive_n(spec.n);
  if (strategy == Strategy::Direct) return delta_direct(spec);
  if (spec.m <= 2) return 0;
  return strategy == Strategy::Recur ? delta_recur(spec) : delta_closed(spec);
}

BigInt residue_sum(const SumSpec& spec, Strategy strategy) {
  if (strategy == Strategy::Direct) return residue_sum_direct(spec);
  return exact_div(delta(spec, strategy) + delta_offset(spec), BigInt(static_cast<unsigned long>(spec.m)));
}

}  // namespace lucasres
