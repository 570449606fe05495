#ifndef LUCASRES_VERIFY_HPP
#define LUCASRES_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lucasres/bigint.hpp"
#include "lucasres/lucas.hpp"
#include "lucasres/report.hpp"

namespace lucasres {

enum class CheckId {
  LemmaBinomP,
  FermatProps,
  QuotientV,
  LemmaVp,
  Thm3Lucas,
  Thm3LucasPlus,
  Thm4Lucas,
  Thm4LucasPlus,
  LegendreM3,
  C44,
  C47,
  C48,
  C411,
  C53,
  C55,
};

std::string_view check_id_name(CheckId id) noexcept;
std::optional<CheckId> parse_check_id(std::string_view name);
const std::vector<CheckId>& all_check_ids();
/// Checks whose statement has no free parameter `a`.
bool is_a_free(CheckId id) noexcept;
bool is_corollary(CheckId id) noexcept;

// Every check takes p as an odd prime (a documented precondition) and throws
// InvalidArgument only for p outside [3, kMaxPrime]. Hypothesis failures are
// reported in the returned CheckReport.

/// [p r]_m(a) = delta_{0=r} + delta_{p=r} a^p - p K_{p,m,r}(a) (mod p^2).
CheckReport check_lemma_binom_p(std::uint64_t p, std::uint64_t m, const BigInt& r, const BigInt& a);

/// v-quotients against q_p(A), branching on eps = (D/p).
CheckReport check_quotient_v(const LucasParams& params, std::uint64_t p);

CheckReport check_thm_3lucas(std::uint64_t p, const BigInt& a);
CheckReport check_thm_3lucas_plus(std::uint64_t p, const BigInt& a);
CheckReport check_lemma_vp(std::uint64_t p, const BigInt& a);
CheckReport check_thm_4lucas(std::uint64_t p, const BigInt& a);
/// Both single-sum forms of the branch selected by p mod 4.
CheckReport check_thm_4lucas_plus(std::uint64_t p, const BigInt& a);

/// (-3/p) recovered from the a = 2 closed forms of Delta_3 against Euler's criterion.
CheckReport check_legendre_m3(std::uint64_t p);

/// The a = -2 / a = 2 corollaries, transcribed independently of the theorem checks.
CheckReport check_corollary(CheckId id, std::uint64_t p);

/// The three clauses: q_p(x) via the half power, q_p(xy) additivity, and the
/// sum over r of K_{p,m,r}(a).
CheckReport check_fermat_props(std::uint64_t p, const BigInt& x, const BigInt& y, std::uint64_t m,
                               const BigInt& a);

/// Parameters a sweep point needs beyond (p, a).
struct SweepSettings {
  /// QuotientV with explicit params; without them each `a` selects the cubic
  /// and quartic families.
  std::optional<LucasParams> params;
  /// Moduli for LemmaBinomP (every r) and FermatProps clause (3).
  std::vector<std::uint64_t> m_values;
};

/// All reports the sweep emits at one (p, a): several for the checks that
/// range over m, r or a parameter family.
std::vector<CheckReport> run_check_point(CheckId id, std::uint64_t p, const BigInt& a,
                                         const SweepSettings& settings);

}  // namespace lucasres

#endif  // LUCASRES_VERIFY_HPP
