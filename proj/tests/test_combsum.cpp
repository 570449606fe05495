#include <doctest.h>

#include "lucasres/combsum.hpp"
#include "lucasres/errors.hpp"
#include "oracles.hpp"

using namespace lucasres;

namespace {

SumSpec spec(std::uint64_t n, std::uint64_t m, long r, long a) { return SumSpec::make(n, m, BigInt(r), BigInt(a)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("residue_sum_direct examples") {
  CHECK(residue_sum_direct(spec(5, 3, 1, 1)) == 10);
  CHECK(residue_sum_direct(spec(3, 1, 0, 2)) == 27);
  CHECK(residue_sum_direct(spec(5, 3, 1, 2)) == 90);
}

TEST_CASE("SumSpec validation and normalization") {
  CHECK(code_of([] { spec(0, 3, 1, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { spec(3, 0, 1, 2); }) == ErrorCode::InvalidArgument);
  CHECK(spec(5, 3, -2, 1).r == 1);
  CHECK(SumSpec::make(5, 3, BigInt("100000000000000000000000000001"), BigInt(1)).r == 2);
  CHECK(residue_sum_direct(spec(3, 10, 7, 2)) == 0);
}

TEST_CASE("residue sums against binomial enumeration") {
  for (unsigned long n = 1; n <= 30; ++n)
    for (unsigned long m = 1; m <= 8; ++m)
      for (long r = -2; r < static_cast<long>(m) + 2; ++r)
        for (long a = -3; a <= 3; ++a) CHECK(residue_sum_direct(spec(n, m, r, a)) == oracle::class_sum(n, m, r, a));
}

TEST_CASE("classes partition the row") {
  for (unsigned long n = 1; n <= 20; ++n)
    for (std::uint64_t m = 1; m <= 7; ++m)
      for (long a = -3; a <= 3; ++a) {
        BigInt total = 0;
        for (long r = 0; r < static_cast<long>(m); ++r) total += residue_sum_direct(spec(n, m, r, a));
        CHECK(total == oracle::ipow(1 + a, n));
      }
}

TEST_CASE("delta examples") {
  for (long a = -6; a <= 6; ++a) {
    CHECK(delta_direct(spec(1, 3, 0, a)) == 2 - a);
    CHECK(delta_direct(spec(1, 4, 1, a)) == 2 * a);
    for (std::uint64_t m : {1, 2}) {
      CHECK(delta_direct(spec(9, m, 1, a)) == 0);
      CHECK(delta(spec(9, m, 0, a), Strategy::Recur) == 0);
    }
    CHECK(delta_recur(spec(2, 3, 1, a)) == -a * a + 4 * a - 1);
    CHECK(delta_recur(spec(4, 6, 0, a)) == -2 * a * a * a * a - 12 * a * a + 4);
    CHECK(delta_closed3(BigInt(2), 2, BigInt(a)) == 2 * a * a - 2 * a - 1);
    CHECK(delta_closed3(BigInt(0), 1, BigInt(a)) == 2 - a);
    CHECK(delta_closed4(BigInt(0), 2, BigInt(a)) == 2 - 2 * a * a);
    CHECK(delta_closed4(BigInt(1), 2, BigInt(a)) == 4 * a);
    if (a != 0) {
      CHECK(delta_closed6(BigInt(0), 1, BigInt(a)) == 4);
      CHECK(delta_closed6(BigInt(1), 3, BigInt(a)) == -2 * a * a * a + 12 * a);
    }
  }
  CHECK(delta_recur(spec(12, 5, 2, 3)) == oracle::delta(12, 5, 2, 3));
  CHECK(delta_closed3(BigInt(1), 7, BigInt(5)) == oracle::delta(7, 3, 1, 5));
  CHECK(delta_closed4(BigInt(3), 6, BigInt(-3)) == oracle::delta(6, 4, 3, -3));
  CHECK(delta_closed6(BigInt(5), 4, BigInt(2)) == oracle::delta(4, 6, 5, 2));
  CHECK(delta3_a2(BigInt(0), 1) == 0);
  CHECK(delta3_a2(BigInt(1), 2) == 3);
  CHECK(delta3_a2(BigInt(2), 7) == 81);
  CHECK(oracle::delta(7, 3, 2, 2) == 81);
}

TEST_CASE("strategy errors") {
  CHECK(code_of([] { delta_closed(spec(5, 5, 1, 2)); }) == ErrorCode::UnsupportedModulus);
  CHECK(code_of([] { delta_recur(spec(5, 2, 1, 2)); }) == ErrorCode::UnsupportedModulus);
  CHECK(code_of([] { delta_closed6(BigInt(1), 4, BigInt(0)); }) == ErrorCode::ZeroA);
  CHECK(parse_strategy("recur") == Strategy::Recur);
  CHECK(!parse_strategy("fast"));
}

TEST_CASE("every strategy agrees with the oracle") {
  for (std::uint64_t m = 1; m <= 12; ++m)
    for (long r = 0; r < static_cast<long>(m); ++r)
      for (long a = -4; a <= 4; ++a)
        for (std::uint64_t n = 1; n <= 40; n += 3) {
          const SumSpec s = spec(n, m, r, a);
          const BigInt expect = m <= 2 ? BigInt(0) : oracle::delta(n, m, r, a);
          CHECK(delta_direct(s) == oracle::delta(n, m, r, a));
          CHECK(delta(s, Strategy::Recur) == expect);
          CHECK(residue_sum(s, Strategy::Recur) == oracle::class_sum(n, m, r, a));
          if (m == 3 || m == 4 || (m == 6 && a != 0)) {
            CHECK(delta(s, Strategy::Closed) == expect);
            CHECK(residue_sum(s, Strategy::Closed) == oracle::class_sum(n, m, r, a));
          }
        }
}

TEST_CASE("recurrence series") {
  const auto series = delta_recur_series(7, 3, BigInt(-2), 60);
  REQUIRE(series.size() == 60);
  for (std::uint64_t n = 1; n <= 60; ++n) CHECK(series[n - 1] == oracle::delta(n, 7, 3, -2));
}
