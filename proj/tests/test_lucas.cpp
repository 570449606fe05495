#include <doctest.h>

#include <random>

#include "lucasres/errors.hpp"
#include "lucasres/lucas.hpp"
#include "oracles.hpp"

using namespace lucasres;

TEST_CASE("lucas_pair examples") {
  const LucasParams fib(BigInt(-1), BigInt(1));
  CHECK(lucas_pair(fib, 10).u == 55);
  CHECK(lucas_pair(fib, 10).v == 123);
  const LucasParams s(BigInt(1), BigInt(4));
  CHECK(lucas_pair(s, 0).u == 0);
  CHECK(lucas_pair(s, 0).v == 2);
  CHECK(lucas_pair(s, 4).u == 56);
  CHECK(fib.D() == 5);
}

TEST_CASE("lucas_pair_mod examples") {
  const LucasParams fib(BigInt(-1), BigInt(1));
  auto [u, v] = lucas_pair_mod(fib, 10, 100);
  CHECK(u.value() == 55);
  CHECK(v.value() == 23);
  auto [u0, v0] = lucas_pair_mod(LucasParams(BigInt(9), BigInt(-4)), 0, 2);
  CHECK(u0.value() == 0);
  CHECK(v0.value() == 0);
  auto [pu, pv] = lucas_pair_mod(LucasParams(BigInt(-1), BigInt(2)), 5, 1000000000);
  CHECK(pu.value() == 29);
  CHECK(pv.value() == 82);
}

TEST_CASE("lucas_terms matches iteration") {
  const auto t = lucas_terms(LucasParams(BigInt(3), BigInt(-5)), 40);
  const auto o = oracle::lucas(3, -5, 40);
  CHECK(t.u == o.u);
  CHECK(t.v == o.v);
}

TEST_CASE("families") {
  const BigInt a = -2;
  CHECK(LucasParams::cubic_family(a) == LucasParams(BigInt(7), BigInt(4)));
  CHECK(LucasParams::quartic_family(a) == LucasParams(BigInt(5), BigInt(2)));
  CHECK(LucasParams::cubic_family_conjugate(a) == LucasParams(BigInt(3), BigInt(0)));
}

TEST_CASE("epsilon") {
  const LucasParams fib(BigInt(-1), BigInt(1));
  CHECK(lucas_epsilon(fib, 7) == -1);
  CHECK(lucas_epsilon(fib, 5) == 0);
  CHECK(lucas_epsilon(fib, 11) == 1);
}

TEST_CASE("lucas quotient") {
  const LucasParams fib(BigInt(-1), BigInt(1));
  CHECK(lucas_quotient_mod_p(fib, 7).value() == 3);
  CHECK(lucas_quotient_mod_p(fib, 3).value() == 1);
  CHECK_THROWS_AS(lucas_quotient_mod_p(fib, 2), Error);
  CHECK(lucas_quotient_mod_p(LucasParams(BigInt(7), BigInt(4)), 5).value() == oracle::lucas_quotient(7, 4, 5));
  try {
    lucas_quotient_mod_p(fib, 5);
    FAIL("p | D accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolation);
  }
  for (long A = -6; A <= 6; ++A)
    for (long B = -6; B <= 6; ++B) {
      const LucasParams params{BigInt(A), BigInt(B)};
      for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 97}) {
        if (divides(p, params.A() * params.D())) continue;
        CHECK(lucas_quotient_mod_p(params, p).value() == oracle::lucas_quotient(A, B, p));
      }
    }
}

TEST_CASE("u_(p-eps) = 0 and u_p = eps mod p") {
  for (long A = -5; A <= 5; ++A)
    for (long B = -5; B <= 5; ++B) {
      const LucasParams params{BigInt(A), BigInt(B)};
      for (std::uint64_t p : {3, 5, 7, 11, 13, 101, 1009}) {
        if (divides(p, params.A())) continue;
        const int eps = lucas_epsilon(params, p);
        CHECK(lucas_pair_mod(params, p - eps, p).first.value() == 0);
        CHECK(lucas_pair_mod(params, p, p).first == Residue(BigInt(eps), p));
      }
    }
}

TEST_CASE("fast doubling agrees with exact values mod random moduli") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const long A = static_cast<long>(rng() % 41) - 20;
    const long B = static_cast<long>(rng() % 41) - 20;
    const std::uint64_t n = rng() % 300;
    const std::uint64_t M = 2 + rng() % ((std::uint64_t{1} << 32) - 2);
    const auto exact = oracle::lucas(A, B, n + 1);
    auto [u, v] = lucas_pair_mod(LucasParams(BigInt(A), BigInt(B)), n, M);
    CHECK(u.value() == oracle::mod(exact.u[n], M));
    CHECK(v.value() == oracle::mod(exact.v[n], M));
  }
}
