// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lucasres/combsum.hpp"
#include "lucasres/lucas.hpp"
#include "lucasres/polyseq.hpp"
#include "lucasres/scanner.hpp"
#include "lucasres/verify.hpp"
#include "oracles.hpp"

using namespace lucasres;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> run;
};

std::string str(long x) { return std::to_string(x); }

Verdict polynomial_identities() {
  Verdict out;
  std::size_t clauses = 0;
  for (unsigned long n = 1; n <= 50; ++n) {
    for (long a = -10; a <= 10; ++a) {
      const oracle::Int A(a);
      const IntPoly g = poly_G(n, A);
      const IntPoly q = poly_Q(n, A);
      oracle::Poly rhs_g = oracle::shifted_power(-1, 2 * n + 1);
      rhs_g[0] -= oracle::ipow(A, 2 * n + 1);
      out.expect(oracle::mul({-1 - A, 1}, g.coeffs()) == oracle::trim(rhs_g),
                 "(x-1-a)G_n product, n=" + str(n) + " a=" + str(a));
      oracle::Poly rhs_q = oracle::shifted_power(-1, 2 * n + 2);
      rhs_q[0] -= oracle::ipow(A, 2 * n + 2);
      out.expect(oracle::mul(oracle::mul({-1 - A, 1}, {-1 + A, 1}), q.coeffs()) == oracle::trim(rhs_q),
                 "(x-1-a)(x-1+a)Q_n product, n=" + str(n) + " a=" + str(a));
      for (const CheckReport& r : {check_G_coeffs(n, A), check_Q_coeffs(n, A)}) {
        clauses += r.clauses.size();
        out.expect(r.pass(), r.check_id + " n=" + str(n) + " a=" + str(a));
      }
    }
  }
  out.note = "2142 products, " + std::to_string(clauses) + " coefficient clauses";
  return out;
}

Verdict printed_polynomials() {
  Verdict out;
  for (long a = -10; a <= 10; ++a) {
    const BigInt A(a);
    const BigInt A2 = A * A, A3 = A2 * A, A4 = A3 * A;
    out.expect(poly_G(1, A).coeffs() == oracle::trim({A2 - A + 1, A - 2, 1}), "G_1 a=" + str(a));
    out.expect(poly_G(2, A).coeffs() == oracle::trim({A4 - A3 + A2 - A + 1, A3 - 2 * A2 + 3 * A - 4, A2 - 3 * A + 6, A - 4, 1}),
               "G_2 a=" + str(a));
    out.expect(poly_Q(1, A).coeffs() == oracle::trim({1 + A2, -2, 1}), "Q_1 a=" + str(a));
    const oracle::Poly q2 = oracle::trim({A4 + A2 + 1, -(2 * A2 + 4), A2 + 6, -4, 1});
    out.expect(poly_Q(2, A).coeffs() == q2, "Q_2 a=" + str(a));
    out.expect(oracle::mul({A2 - A + 1, A - 2, 1}, {A2 + A + 1, -(A + 2), 1}) == q2, "Q_2 factorisation a=" + str(a));
  }
  out.note = "21 values of a";
  return out;
}

Verdict strategy_equivalence() {
  Verdict out;
  std::size_t compared = 0;
  for (std::uint64_t m = 3; m <= 12; ++m)
    for (std::uint64_t r = 0; r < m; ++r)
      for (long a = -5; a <= 5; ++a) {
        const BigInt A(a);
        const auto series = delta_recur_series(m, r, A, 200);
        for (std::uint64_t n = 1; n <= 200; ++n) {
          const SumSpec spec{n, m, r, A};
          const BigInt direct = delta_direct(spec);
          const std::string at = "m=" + std::to_string(m) + " r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                 " a=" + str(a);
          out.expect(series[n - 1] == direct, "recur " + at);
          ++compared;
          if (m == 3 || m == 4 || (m == 6 && a != 0)) {
            out.expect(delta_closed(spec) == direct, "closed " + at);
            ++compared;
          }
          if (m == 3 && a == 2) {
            out.expect(delta3_a2(BigInt(static_cast<unsigned long>(r)), n) == direct, "a=2 form " + at);
            ++compared;
          }
          if (n == 200) out.expect(delta(spec, Strategy::Recur) == direct, "single-value recur " + at);
        }
      }
  out.note = std::to_string(compared) + " comparisons; m=6 closed form undefined at a=0";
  return out;
}

Verdict seed_values() {
  Verdict out;
  struct Seed {
    std::uint64_t m, r, n;
    std::function<BigInt(const BigInt&)> value;
    const char* name;
  };
  const std::vector<Seed> seeds = {
      {3, 0, 1, [](const BigInt& a) -> BigInt { return 2 - a; }, "D3(0,1)"},
      {3, 1, 2, [](const BigInt& a) -> BigInt { return -a * a + 4 * a - 1; }, "D3(1,2)"},
      {3, 2, 2, [](const BigInt& a) -> BigInt { return 2 * a * a - 2 * a - 1; }, "D3(2,2)"},
      {4, 0, 2, [](const BigInt& a) -> BigInt { return 2 - 2 * a * a; }, "D4(0,2)"},
      {4, 1, 2, [](const BigInt& a) -> BigInt { return 4 * a; }, "D4(1,2)"},
      {6, 0, 4, [](const BigInt& a) -> BigInt { return -2 * a * a * a * a - 12 * a * a + 4; }, "D6(0,4)"},
      {6, 1, 3, [](const BigInt& a) -> BigInt { return -2 * a * a * a + 12 * a; }, "D6(1,3)"},
  };
  for (const auto& s : seeds)
    for (long a = -10; a <= 10; ++a) {
      const BigInt A(a);
      const SumSpec spec{s.n, s.m, s.r, A};
      const BigInt expect = s.value(A);
      const std::string at = std::string(s.name) + " a=" + str(a);
      out.expect(oracle::delta(s.n, s.m, static_cast<long>(s.r), A) == expect, "oracle " + at);
      out.expect(delta_direct(spec) == expect, "direct " + at);
      out.expect(delta_recur(spec) == expect, "recur " + at);
      if (s.m != 6 || a != 0) out.expect(delta_closed(spec) == expect, "closed " + at);
    }
  out.note = "7 seeds x 21 values of a";
  return out;
}

std::vector<BigInt> a_grid() {
  std::vector<BigInt> as;
  for (long a = -5; a <= 5; ++a) as.emplace_back(a);
  return as;
}

Verdict sweep(const std::vector<CheckId>& ids, std::uint64_t lo_default) {
  Verdict out;
  std::ostringstream note;
  const auto as = a_grid();
  for (CheckId id : ids) {
    const std::uint64_t lo = id == CheckId::LegendreM3 ? 5 : lo_default;
    const ScanResult r = verify_sweep({id, is_a_free(id) ? std::vector<BigInt>{} : as, lo, 2000, {}});
    for (const auto* f : r.failures()) out.expect(false, to_json_line(*f));
    out.expect(r.counts.passed > 0, std::string(check_id_name(id)) + " never applied");
    note << check_id_name(id) << " " << r.counts.passed << "/" << r.counts.skipped << "/" << r.counts.unsatisfiable
         << " ";
  }
  out.note = "pass/skipped/unsatisfiable: " + note.str();
  return out;
}

Verdict congruence_sweeps() {
  return sweep({CheckId::LemmaBinomP, CheckId::FermatProps, CheckId::QuotientV, CheckId::LemmaVp, CheckId::Thm3Lucas,
                CheckId::Thm3LucasPlus, CheckId::Thm4Lucas, CheckId::Thm4LucasPlus, CheckId::LegendreM3},
               3);
}

Verdict corollaries() {
  Verdict out = sweep({CheckId::C44, CheckId::C47, CheckId::C48, CheckId::C411, CheckId::C53, CheckId::C55}, 3);
  const CheckReport c47 = check_corollary(CheckId::C47, 5);
  const oracle::Int hand_sum = -8;                                   // k = 1 only
  const oracle::Int hand_rhs = -3 * ((oracle::ipow(3, 4) - 1) / 5);  // -3 q_5(3) = -48
  out.expect(c47.pass(), "c47 at p=5");
  out.expect(c47.primary() && c47.primary()->lhs == oracle::mod(hand_sum, 5) &&
                 c47.primary()->rhs == oracle::mod(hand_rhs, 5) && c47.primary()->lhs == 2,
             "c47 at p=5 hand values");
  out.note += "; c47 p=5: -8 = 2 = -48 (mod 5)";
  return out;
}

Verdict wall_scans() {
  Verdict out;
  const auto t0 = std::chrono::steady_clock::now();
  const ScanResult fib = wall_scan({LucasParams(BigInt(-1), BigInt(1)), 3, 100000}, {kDefaultSegmentSize, 1, {}});
  const double fib_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.expect(fib.wall_hits.empty(), "Fibonacci scan reported hits");
  out.expect(fib_seconds < 120, "Fibonacci scan took " + std::to_string(fib_seconds) + " s");
  std::size_t hits = 0;
  for (auto [A, B] : std::vector<std::pair<long, long>>{{1, 4}, {-1, 2}, {3, 1}, {-3, 5}, {2, 7}}) {
    const LucasParams params{BigInt(A), BigInt(B)};
    const ScanResult r = wall_scan({params, 3, 100000});
    for (const auto& h : r.wall_hits) {
      ++hits;
      out.expect(h.verified_exact && wall_condition_exact(params, h.p),
                 "hit p=" + std::to_string(h.p) + " A=" + str(A) + " B=" + str(B) + " failed exact recheck");
    }
  }
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << "Fibonacci: " << fib.counts.primes_scanned << " primes, 0 hits, " << fib_seconds
       << " s single-threaded; " << hits << " hits in other scans, all re-verified exactly";
  out.note = note.str();
  return out;
}

Verdict lucas_identities() {
  Verdict out;
  std::vector<std::pair<long, long>> grid;
  for (long A = -3; A <= 3; ++A)
    for (long B = -3; B <= 3; ++B)
      if (B * B != 4 * A) grid.emplace_back(A, B);  // Binet needs alpha != beta
  const std::size_t N = 200;
  for (auto [a_, b_] : grid) {
    const LucasParams params{BigInt(a_), BigInt(b_)};
    const BigInt A = params.A(), B = params.B(), D = params.D();
    const LucasTerms t = lucas_terms(params, 2 * N + 2);
    const auto o = oracle::lucas(A, B, 2 * N + 2);
    const std::string at = " A=" + str(a_) + " B=" + str(b_);
    out.expect(t.u == o.u && t.v == o.v, "terms differ from iteration" + at);
    // (B + sqrt D)^n = x + y sqrt D, so 2^(n-1) u_n = y and 2^(n-1) v_n = x.
    BigInt x = 1, y = 0, An = 1;
    for (std::size_t n = 0; n <= N; ++n) {
      const auto& u = t.u;
      const auto& v = t.v;
      const std::string atn = at + " n=" + std::to_string(n);
      if (n >= 1) {
        const BigInt scale = oracle::ipow(2, n - 1);
        out.expect(scale * u[n] == y && scale * v[n] == x, "Binet" + atn);
        out.expect(v[n] == u[n + 1] - A * u[n - 1] && v[n] == B * u[n] - 2 * A * u[n - 1] &&
                       v[n] == 2 * u[n + 1] - B * u[n],
                   "v via u" + atn);
        out.expect(D * u[n] == v[n + 1] - A * v[n - 1] && D * u[n] == B * v[n] - 2 * A * v[n - 1] &&
                       D * u[n] == 2 * v[n + 1] - B * v[n],
                   "Du via v" + atn);
      }
      out.expect(u[2 * n] == u[n] * v[n] && u[2 * n + 1] == u[n + 1] * u[n + 1] - A * u[n] * u[n], "doubling u" + atn);
      out.expect(v[2 * n] == v[n] * v[n] - 2 * An, "doubling v" + atn);
      out.expect(v[n] * v[n] - D * u[n] * u[n] == 4 * An, "norm" + atn);
      const BigInt nx = B * x + D * y, ny = x + B * y;
      x = nx;
      y = ny;
      An *= A;
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [a_, b_] = grid[rng() % grid.size()];
    const std::uint64_t n = rng() % (N + 1);
    const std::uint64_t M = 2 + rng() % ((std::uint64_t{1} << 32) - 2);
    const auto exact = lucas_pair(LucasParams(BigInt(a_), BigInt(b_)), n);
    const auto [u, v] = lucas_pair_mod(LucasParams(BigInt(a_), BigInt(b_)), n, M);
    out.expect(u.value() == oracle::mod(exact.u, M) && v.value() == oracle::mod(exact.v, M),
               "mod agreement A=" + str(a_) + " B=" + str(b_) + " n=" + std::to_string(n) + " M=" + std::to_string(M));
  }
  out.note = std::to_string(grid.size()) + " (A,B) pairs, n <= 200; 2000 random moduli";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "polynomial identities for G_n, Q_n", 10, polynomial_identities},
      {2, "printed G_1, G_2, Q_1, Q_2", 10, printed_polynomials},
      {3, "Delta strategy equivalence", 60, strategy_equivalence},
      {4, "seed values of Delta_3, Delta_4, Delta_6", 10, seed_values},
      {5, "congruence sweeps, p <= 2000", 300, congruence_sweeps},
      {6, "corollary checks, p <= 2000", 300, corollaries},
      {7, "Wall scans", 120, wall_scans},
      {8, "Lucas sequence identity suite", 60, lucas_identities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds >= c.limit_seconds) {
      o.ok = false;
      o.problems.push_back("over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s budget");
    }
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                o.note.c_str());
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
