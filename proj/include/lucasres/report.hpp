#ifndef LUCASRES_REPORT_HPP
#define LUCASRES_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucasres/bigint.hpp"
#include "lucasres/modular.hpp"

namespace lucasres {

enum class Outcome { Pass, Fail, Skipped, Unsatisfiable };

const char* outcome_name(Outcome outcome) noexcept;

/// One congruence or identity inside a check. `modulus == 0` means the two
/// sides are compared as exact integers.
struct Clause {
  std::string label;
  bool hypotheses_met = true;
  BigInt lhs;
  BigInt rhs;
  std::uint64_t modulus = 0;
  std::string note;

  bool pass() const;

  static Clause congruence(std::string label, const Residue& lhs, const Residue& rhs);
  static Clause exact(std::string label, BigInt lhs, BigInt rhs);
  static Clause skipped(std::string label, std::string why);
};

struct CheckReport {
  std::string check_id;
  std::optional<std::uint64_t> p;
  std::optional<BigInt> a;
  std::vector<Clause> clauses;
  std::string detail;
  /// Set when the hypothesis degenerates for this `a` regardless of p.
  bool unsatisfiable = false;

  bool hypotheses_met() const;
  /// All applicable clauses hold and at least one applied.
  bool pass() const;
  Outcome outcome() const;

  /// The first applicable clause, or nullptr.
  const Clause* primary() const;
};

/// Single-line JSON with big integers as decimal strings.
std::string to_json_line(const CheckReport& report);

}  // namespace lucasres

#endif  // LUCASRES_REPORT_HPP
