#include "lucasres/verify.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "lucasres/combsum.hpp"
#include "lucasres/errors.hpp"
#include "lucasres/modular.hpp"

namespace lucasres {

namespace {

struct IdName {
  CheckId id;
  std::string_view name;
};

constexpr std::array<IdName, 15> kIdNames{{
    {CheckId::LemmaBinomP, "lemma_binom_p"},
    {CheckId::FermatProps, "fermat_props"},
    {CheckId::QuotientV, "quotient_v"},
    {CheckId::LemmaVp, "lemma_vp"},
    {CheckId::Thm3Lucas, "thm_3lucas"},
    {CheckId::Thm3LucasPlus, "thm_3lucas_plus"},
    {CheckId::Thm4Lucas, "thm_4lucas"},
    {CheckId::Thm4LucasPlus, "thm_4lucas_plus"},
    {CheckId::LegendreM3, "legendre_m3"},
    {CheckId::C44, "c44"},
    {CheckId::C47, "c47"},
    {CheckId::C48, "c48"},
    {CheckId::C411, "c411"},
    {CheckId::C53, "c53"},
    {CheckId::C55, "c55"},
}};

// Arithmetic mod p with integer inputs, so each statement reads close to
// its printed form.
class ModP {
 public:
  explicit ModP(std::uint64_t p) : p_(p) {}

  Residue operator()(const BigInt& x) const { return {x, p_}; }
  Residue operator()(long x) const { return {BigInt(x), p_}; }
  Residue frac(const BigInt& num, const BigInt& den) const { return (*this)(num) * inv_mod(den, p_); }
  Residue frac(long num, long den) const { return frac(BigInt(num), BigInt(den)); }
  Residue q(const BigInt& x) const { return fermat_quotient(p_, x); }
  Residue q(long x) const { return q(BigInt(x)); }

  /// sum_{k=1}^{k_max} base^(exp_mul k + exp_off) / (den_mul k + den_off)
  Residue printed_sum(std::uint64_t k_max, const BigInt& base, long exp_mul, long exp_off, long den_mul,
                      long den_off) const {
    Residue sum(0, p_);
    const Residue b = (*this)(base);
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      const long kk = static_cast<long>(k);
      sum += b.pow(static_cast<std::uint64_t>(exp_mul * kk + exp_off)) * (*this)(den_mul * kk + den_off).inverse();
    }
    return sum;
  }

  std::uint64_t p() const { return p_; }

 private:
  std::uint64_t p_;
};

CheckReport new_report(CheckId id, std::uint64_t p, std::optional<BigInt> a) {
  CheckReport report;
  report.check_id = std::string(check_id_name(id));
  report.p = p;
  report.a = std::move(a);
  return report;
}

// Returns true when p ∤ product. Otherwise records a skipped clause, or marks
// the report unsatisfiable when the product vanishes identically.
bool gate(CheckReport& report, std::uint64_t p, const BigInt& product, std::string_view statement) {
  if (product == 0) {
    report.unsatisfiable = true;
    report.detail = "hypothesis p ∤ " + std::string(statement) + " fails for every p (factor is 0)";
    return false;
  }
  if (divides(p, product)) {
    report.clauses.push_back(Clause::skipped("hypothesis", "p | " + std::string(statement)));
    return false;
  }
  return true;
}

void require_prime(std::uint64_t p) { require_odd_prime_range(p); }

const char* branch_label(std::uint64_t p, std::uint64_t m) {
  if (m == 3) return p % 3 == 1 ? "p = 1 (mod 3)" : "p = 2 (mod 3)";
  return p % 4 == 1 ? "p = 1 (mod 4)" : "p = 3 (mod 4)";
}

}  // namespace

std::string_view check_id_name(CheckId id) noexcept {
  for (const auto& entry : kIdNames)
    if (entry.id == id) return entry.name;
  return "unknown";
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& entry : kIdNames)
    if (entry.name == lowered) return entry.id;
  return std::nullopt;
}

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (const auto& entry : kIdNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

bool is_corollary(CheckId id) noexcept {
  switch (id) {
    case CheckId::C44:
    case CheckId::C47:
    case CheckId::C48:
    case CheckId::C411:
    case CheckId::C53:
    case CheckId::C55: return true;
    default: return false;
  }
}

bool is_a_free(CheckId id) noexcept { return id == CheckId::LegendreM3 || is_corollary(id); }

CheckReport check_lemma_binom_p(std::uint64_t p, std::uint64_t m, const BigInt& r, const BigInt& a) {
  require_prime(p);
  const SumSpec spec = SumSpec::make(p, m, r, a);
  const std::uint64_t p2 = p * p;
  CheckReport report = new_report(CheckId::LemmaBinomP, p, a);
  report.detail = "m=" + std::to_string(m) + ",r=" + std::to_string(spec.r);

  const Residue lhs(residue_sum_direct(spec), p2);
  Residue rhs(spec.r == 0 ? 1 : 0, p2);
  if (p % m == spec.r) rhs += Residue(a, p2).pow(p);
  rhs -= Residue(mulmod(p, k_sum(p, m, BigInt(static_cast<unsigned long>(spec.r)), a).value(), p2), p2);
  report.clauses.push_back(Clause::congruence("[p r]_m(a) = d0 + dp a^p - p K (mod p^2)", lhs, rhs));
  return report;
}

CheckReport check_quotient_v(const LucasParams& params, std::uint64_t p) {
  require_prime(p);
  CheckReport report = new_report(CheckId::QuotientV, p, std::nullopt);
  report.detail = "A=" + to_string(params.A()) + ",B=" + to_string(params.B());
  if (!gate(report, p, params.D() * params.A(), "D*A")) return report;
  const ModP F(p);
  const int eps = lucas_epsilon(params, p);
  report.detail += ",eps=" + std::to_string(eps);
  if (eps == 1) {
    report.clauses.push_back(Clause::congruence("(v_(p-1) - 2)/p = q_p(A)",
                                                lucas_v_quotient(params, p - 1, BigInt(2), p), F.q(params.A())));
  } else {
    report.clauses.push_back(Clause::congruence("(v_(p+1) - 2A)/p = A q_p(A)",
                                                lucas_v_quotient(params, p + 1, 2 * params.A(), p),
                                                F(params.A()) * F.q(params.A())));
  }
  return report;
}

CheckReport check_thm_3lucas(std::uint64_t p, const BigInt& a) {
  require_prime(p);
  CheckReport report = new_report(CheckId::Thm3Lucas, p, a);
  if (!gate(report, p, 3 * a * (a * a * a + 1), "3a(a^3+1)")) return report;
  report.detail = branch_label(p, 3);
  const ModP F(p);
  const LucasParams params = LucasParams::cubic_family(a);
  const BigInt A = a * a - a + 1;
  const Residue K0 = k_sum(p, 3, BigInt(0), a);
  const Residue K1 = k_sum(p, 3, BigInt(1), a);
  if (p % 3 == 1) {
    const Residue rhs = (F(2 * a - 1) * K0 + F(a - 2) * K1) * F.frac(BigInt(1), a * A) -
                        F.frac(a - 2, A) * F.q(a) + F.frac(a * a - 1, a * A) * F.q(a + 1);
    report.clauses.push_back(Clause::congruence("u_(p-1)/p", lucas_u_quotient(params, p - 1, p), rhs));
  } else {
    const Residue rhs = (F(a - 2) * K1 - F(a + 1) * K0) * F.frac(BigInt(1), a) - F.frac(a + 1, a) * F.q(a + 1);
    report.clauses.push_back(Clause::congruence("u_(p+1)/p", lucas_u_quotient(params, p + 1, p), rhs));
  }
  return report;
}

CheckReport check_thm_3lucas_plus(std::uint64_t p, const BigInt& a) {
  require_prime(p);
  CheckReport report = new_report(CheckId::Thm3LucasPlus, p, a);
  if (!gate(report, p, 3 * a * (2 - a) * (a * a * a + 1), "3a(2-a)(a^3+1)")) return report;
  report.detail = branch_label(p, 3);
  const ModP F(p);
  const LucasParams params = LucasParams::cubic_family(a);
  const BigInt A = a * a - a + 1;
  const BigInt three_a2 = 3 * a * a;
  const Residue tail = F(2 - a) * F.q(A) + F(2 * (a + 1)) * F.q(a + 1);
  const BigInt neg_a = -a;
  if (p % 3 == 1) {
    const Residue sum = F.printed_sum((p - 1) / 3, neg_a, 3, 0, 1, 0);
    const Residue rhs = F.frac(BigInt(2), three_a2) * sum + F.frac(BigInt(1), three_a2) * tail;
    report.clauses.push_back(Clause::congruence("u_(p-1)/p", lucas_u_quotient(params, p - 1, p), rhs));
  } else {
    const Residue sum = F.printed_sum((p - 2) / 3, neg_a, 3, 0, 1, 0);
    const Residue rhs = -F.frac(2 * A, three_a2) * sum - F.frac(A, three_a2) * tail;
    report.clauses.push_back(Clause::congruence("u_(p+1)/p", lucas_u_quotient(params, p + 1, p), rhs));
  }
  return report;
}

CheckReport check_lemma_vp(std::uint64_t p, const BigInt& a) {
  require_prime(p);
  CheckReport report = new_report(CheckId::LemmaVp, p, a);
  // p ∤ a+1 is implied by the q_p(a+1) term.
  if (!gate(report, p, 3 * a * (2 - a) * (a * a - a + 1) * (a + 1), "3a(2-a)(a^2-a+1)(a+1)")) return report;
  const ModP F(p);
  const LucasParams params = LucasParams::cubic_family(a);
  const Residue lhs = lucas_v_quotient(params, p, 2 - a, p);
  const Residue rhs = -F.printed_sum(p / 3, BigInt(-a), 3, 0, 1, 0) - F(a + 1) * F.q(a + 1);
  report.clauses.push_back(Clause::congruence("(v_p - (2-a))/p", lhs, rhs));
  return report;
}

CheckReport check_thm_4lucas(std::uint64_t p, const BigInt& a) {
  require_prime(p);
  CheckReport report = new_report(CheckId::Thm4Lucas, p, a);
  if (!gate(report, p, a * (a * a * a * a - 1), "a(a^4-1)")) return report;
  report.detail = branch_label(p, 4);
  const ModP F(p);
  const LucasParams params = LucasParams::quartic_family(a);
  const BigInt A = a * a + 1;
  const Residue K0 = k_sum(p, 4, BigInt(0), a);
  const Residue K1 = k_sum(p, 4, BigInt(1), a);
  if (p % 4 == 1) {
    const Residue rhs = F.frac(BigInt(2), a * A) * (F(a) * K0 - K1) + F.frac(BigInt(2), A) * F.q(a) +
                        F.frac(a * a - 1, 2 * a * A) * (F.q(a + 1) - F.q(a - 1));
    report.clauses.push_back(Clause::congruence("u_(p-1)/p", lucas_u_quotient(params, p - 1, p), rhs));
  } else {
    const Residue rhs = -F.frac(BigInt(2), a) * (F(a) * K0 + K1) - F.frac((a + 1) * (a + 1), 2 * a) * F.q(a + 1) +
                        F.frac((a - 1) * (a - 1), 2 * a) * F.q(a - 1);
    report.clauses.push_back(Clause::congruence("u_(p+1)/p", lucas_u_quotient(params, p + 1, p), rhs));
  }
  return report;
}

CheckReport check_thm_4lucas_plus(std::uint64_t p, const BigInt& a) {
  require_prime(p);
  CheckReport report = new_report(CheckId::Thm4LucasPlus, p, a);
  if (!gate(report, p, a * (a * a * a * a - 1), "a(a^4-1)")) return report;
  report.detail = branch_label(p, 4);
  const ModP F(p);
  const LucasParams params = LucasParams::quartic_family(a);
  const BigInt A = a * a + 1;
  const Residue T = F(1 + a) * F.q(1 + a);
  const Residue U = F(1 - a) * F.q(1 - a);
  const Residue W = F.q(A);
  if (p % 4 == 1) {
    const Residue lhs = lucas_u_quotient(params, p - 1, p);
    const Residue form1 = F.frac(BigInt(1), 2 * a * a) * (F.printed_sum((p - 1) / 4, a, 4, 0, 1, 0) + T + U + W);
    const Residue form2 =
        F.frac(BigInt(1), 2 * a) * (-F(4) * F.printed_sum((p - 1) / 4, a, 4, -1, 4, -1) + T - U) - F.frac(1, 2) * W;
    report.clauses.push_back(Clause::congruence("u_(p-1)/p, a^(4k)/k form", lhs, form1));
    report.clauses.push_back(Clause::congruence("u_(p-1)/p, a^(4k-1)/(4k-1) form", lhs, form2));
  } else {
    const Residue lhs = lucas_u_quotient(params, p + 1, p);
    const Residue form1 = -F.frac(A, 2 * a * a) * (F.printed_sum((p - 3) / 4, a, 4, 0, 1, 0) + T + U + W);
    const Residue form2 =
        F.frac(A, 2 * a) * (F(4) * F.printed_sum((p + 1) / 4, a, 4, -3, 4, -3) - T + U) + F.frac(A, BigInt(2)) * W;
    report.clauses.push_back(Clause::congruence("u_(p+1)/p, a^(4k)/k form", lhs, form1));
    report.clauses.push_back(Clause::congruence("u_(p+1)/p, a^(4k-3)/(4k-3) form", lhs, form2));
  }
  return report;
}

CheckReport check_legendre_m3(std::uint64_t p) {
  require_prime(p);
  CheckReport report = new_report(CheckId::LegendreM3, p, std::nullopt);
  if (p <= 3) {
    report.clauses.push_back(Clause::skipped("hypothesis", "needs p > 3"));
    return report;
  }
  const ModP F(p);
  const unsigned long cls = p % 3 == 1 ? 1 : 2;
  report.detail = cls == 1 ? "p = 1 (mod 3), via Delta_3(1,p)" : "p = 2 (mod 3), via Delta_3(2,p)";
  const BigInt closed = delta3_a2(BigInt(cls), p);
  const BigInt direct = delta_direct(SumSpec{p, 3, cls, BigInt(2)});
  report.clauses.push_back(Clause::congruence("closed form Delta_3(r,p) = direct", F(closed), F(direct)));

  // Delta_3(1,p) = -(-3)^((p+1)/2) for p = 1 and Delta_3(2,p) = (-3)^((p+1)/2)
  // for p = 2, so (-3)^((p-1)/2) is recovered from the direct value.
  const Residue power = cls == 1 ? -F(direct) : F(direct);
  const Residue derived = power * F(-3).inverse();
  const int euler = legendre(BigInt(-3), p);
  report.clauses.push_back(Clause::congruence("derived (-3/p) = Euler criterion", derived, F(euler)));
  report.clauses.push_back(Clause::congruence("p mod 3 rule = Euler criterion", F(cls == 1 ? 1 : -1), F(euler)));
  return report;
}

CheckReport check_corollary(CheckId id, std::uint64_t p) {
  require_prime(p);
  if (!is_corollary(id)) raise(ErrorCode::InvalidArgument, "not a corollary id: " + std::string(check_id_name(id)));
  CheckReport report = new_report(id, p, std::nullopt);
  const ModP F(p);
  const BigInt eight(8), minus_eight(-8), sixteen(16);

  switch (id) {
    case CheckId::C44:
    case CheckId::C411: {
      if (p == 3 || p == 7) {
        report.clauses.push_back(Clause::skipped("hypothesis", "needs p != 3, 7"));
        return report;
      }
      const LucasParams params(BigInt(7), BigInt(4));
      report.detail = branch_label(p, 3);
      if (p % 3 == 1) {
        const Residue lhs = lucas_u_quotient(params, p - 1, p);
        const std::uint64_t top = (p - 1) / 3;
        Residue rhs = id == CheckId::C44
                          ? F.frac(5, 42) * F.printed_sum(top, eight, 1, 0, 1, 0) +
                                F.frac(1, 14) * F.printed_sum(top, eight, 1, 0, 3, -2) + F.frac(4, 7) * F.q(2)
                          : F.frac(1, 6) * F.printed_sum(top, eight, 1, 0, 1, 0) + F.frac(1, 3) * F.q(7);
        report.clauses.push_back(Clause::congruence("u_(p-1)/p", lhs, rhs));
      } else {
        const Residue lhs = lucas_u_quotient(params, p + 1, p);
        Residue rhs = id == CheckId::C44
                          ? F.frac(1, 2) * F.printed_sum((p + 1) / 3, eight, 1, 0, 3, -2) -
                                F.frac(1, 6) * F.printed_sum((p - 2) / 3, eight, 1, 0, 1, 0)
                          : -F.frac(7, 6) * F.printed_sum((p - 2) / 3, eight, 1, 0, 1, 0) - F.frac(7, 3) * F.q(7);
        report.clauses.push_back(Clause::congruence("u_(p+1)/p", lhs, rhs));
      }
      return report;
    }
    case CheckId::C47:
    case CheckId::C48: {
      if (p <= 3) {
        report.clauses.push_back(Clause::skipped("hypothesis", "needs p > 3"));
        return report;
      }
      if (id == CheckId::C47) {
        report.clauses.push_back(Clause::congruence("sum_(k<=[p/3]) (-8)^k/k = -3 q_p(3)",
                                                    F.printed_sum(p / 3, minus_eight, 1, 0, 1, 0), -F(3) * F.q(3)));
        return report;
      }
      const Residue lhs = F.printed_sum((p + 1) / 3, minus_eight, 1, 0, 12, -8) +
                          F.printed_sum(p / 3, minus_eight, 1, 0, 6, -2);
      const Residue symbol = F(legendre(BigInt(-3), p));
      report.clauses.push_back(Clause::congruence("statement: (-3/p)(2 q_p(2) - q_p(3))", lhs,
                                                  symbol * (F(2) * F.q(2) - F.q(3))));
      report.clauses.push_back(Clause::congruence("proof: (-3/p)(2 q_p(2) - q_p(-3))", lhs,
                                                  symbol * (F(2) * F.q(2) - F.q(-3))));
      return report;
    }
    case CheckId::C53:
    case CheckId::C55: {
      if (p <= 5) {
        report.clauses.push_back(Clause::skipped("hypothesis", "needs p > 5"));
        return report;
      }
      const LucasParams params(BigInt(5), BigInt(2));
      report.detail = branch_label(p, 4);
      if (p % 4 == 1) {
        const Residue lhs = lucas_u_quotient(params, p - 1, p);
        const std::uint64_t top = (p - 1) / 4;
        if (id == CheckId::C53) {
          report.clauses.push_back(Clause::congruence(
              "u_(p-1)/p", lhs,
              F.frac(1, 10) * F.printed_sum(top, sixteen, 1, 0, 1, 0) +
                  F.frac(1, 40) * F.printed_sum(top, sixteen, 1, 0, 4, -3) + F.frac(2, 5) * F.q(2) +
                  F.frac(3, 20) * F.q(3)));
        } else {
          report.clauses.push_back(Clause::congruence(
              "u_(p-1)/p, 16^k/k form", lhs,
              F.frac(1, 8) * F.printed_sum(top, sixteen, 1, 0, 1, 0) + F.frac(3, 8) * F.q(3) + F.frac(1, 8) * F.q(5)));
          report.clauses.push_back(Clause::congruence(
              "u_(p-1)/p, 16^k/(4k-1) form", lhs,
              -F.frac(1, 2) * F.printed_sum(top, sixteen, 1, 0, 4, -1) + F.frac(3, 4) * F.q(3) -
                  F.frac(1, 2) * F.q(5)));
        }
      } else {
        const Residue lhs = lucas_u_quotient(params, p + 1, p);
        if (id == CheckId::C53) {
          report.clauses.push_back(Clause::congruence(
              "u_(p+1)/p", lhs,
              F.frac(1, 8) * F.printed_sum((p + 1) / 4, sixteen, 1, 0, 4, -3) -
                  F.frac(1, 2) * F.printed_sum((p - 3) / 4, sixteen, 1, 0, 1, 0) - F.frac(9, 4) * F.q(3)));
        } else {
          report.clauses.push_back(Clause::congruence(
              "u_(p+1)/p, 16^k/k form", lhs,
              -F.frac(5, 8) * F.printed_sum((p - 3) / 4, sixteen, 1, 0, 1, 0) - F.frac(15, 8) * F.q(3) -
                  F.frac(5, 8) * F.q(5)));
          report.clauses.push_back(Clause::congruence(
              "u_(p+1)/p, 16^k/(4k-3) form", lhs,
              F.frac(5, 8) * F.printed_sum((p + 1) / 4, sixteen, 1, 0, 4, -3) - F.frac(15, 4) * F.q(3) +
                  F.frac(5, 2) * F.q(5)));
        }
      }
      return report;
    }
    default: break;
  }
  return report;
}

CheckReport check_fermat_props(std::uint64_t p, const BigInt& x, const BigInt& y, std::uint64_t m,
                               const BigInt& a) {
  require_prime(p);
  if (m < 1) raise(ErrorCode::InvalidArgument, "m must be at least 1");
  CheckReport report = new_report(CheckId::FermatProps, p, a);
  report.detail = "x=" + to_string(x) + ",y=" + to_string(y) + ",m=" + std::to_string(m);
  const ModP F(p);
  const std::uint64_t p2 = p * p;

  if (divides(p, x)) {
    report.clauses.push_back(Clause::skipped("(1) half-power form", "p | x"));
  } else {
    const int symbol = legendre(x, p);
    const Residue half = Residue(x, p2).pow((p - 1) / 2) - Residue(BigInt(symbol), p2);
    report.clauses.push_back(
        Clause::congruence("(1) q_p(x) = 2 (x/p) (x^((p-1)/2) - (x/p))/p", F.q(x), F(2 * symbol) * divide_by_p(half, p)));
  }

  if (divides(p, x * y)) {
    report.clauses.push_back(Clause::skipped("(2) q_p(xy) = q_p(x) + q_p(y)", "p | xy"));
  } else {
    report.clauses.push_back(Clause::congruence("(2) q_p(xy) = q_p(x) + q_p(y)", F.q(x * y), F.q(x) + F.q(y)));
  }

  if (divides(p, a * (a + 1))) {
    report.clauses.push_back(Clause::skipped("(3) sum_r K_(p,m,r)(a) = a q_p(a) - (a+1) q_p(a+1)", "p | a(a+1)"));
  } else {
    Residue total(0, p);
    for (std::uint64_t r = 0; r < m; ++r) total += k_sum(p, m, BigInt(static_cast<unsigned long>(r)), a);
    report.clauses.push_back(Clause::congruence("(3) sum_r K_(p,m,r)(a) = a q_p(a) - (a+1) q_p(a+1)", total,
                                                F(a) * F.q(a) - F(a + 1) * F.q(a + 1)));
  }
  return report;
}

std::vector<CheckReport> run_check_point(CheckId id, std::uint64_t p, const BigInt& a,
                                         const SweepSettings& settings) {
  std::vector<CheckReport> out;
  const auto moduli = [&](std::uint64_t default_max) {
    std::vector<std::uint64_t> ms = settings.m_values;
    if (ms.empty())
      for (std::uint64_t m = 1; m <= default_max; ++m) ms.push_back(m);
    return ms;
  };
  switch (id) {
    case CheckId::LemmaBinomP:
      for (std::uint64_t m : moduli(6))
        for (std::uint64_t r = 0; r < m; ++r) out.push_back(check_lemma_binom_p(p, m, BigInt(static_cast<unsigned long>(r)), a));
      break;
    case CheckId::FermatProps:
      for (std::uint64_t m : moduli(12)) out.push_back(check_fermat_props(p, a, a + 1, m, a));
      break;
    case CheckId::QuotientV:
      if (settings.params) {
        out.push_back(check_quotient_v(*settings.params, p));
      } else {
        for (const auto& params : {LucasParams::cubic_family(a), LucasParams::quartic_family(a)}) {
          CheckReport r = check_quotient_v(params, p);
          r.a = a;
          out.push_back(std::move(r));
        }
      }
      break;
    case CheckId::LemmaVp: out.push_back(check_lemma_vp(p, a)); break;
    case CheckId::Thm3Lucas: out.push_back(check_thm_3lucas(p, a)); break;
    case CheckId::Thm3LucasPlus: out.push_back(check_thm_3lucas_plus(p, a)); break;
    case CheckId::Thm4Lucas: out.push_back(check_thm_4lucas(p, a)); break;
    case CheckId::Thm4LucasPlus: out.push_back(check_thm_4lucas_plus(p, a)); break;
    case CheckId::LegendreM3: out.push_back(check_legendre_m3(p)); break;
    default: out.push_back(check_corollary(id, p)); break;
  }
  return out;
}

}  // namespace lucasres
