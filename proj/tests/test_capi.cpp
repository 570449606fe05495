#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "lucasres/lucasres.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api: sums") {
  char* out = nullptr;
  REQUIRE(lr_residue_sum(5, 3, "1", "2", LR_STRATEGY_DIRECT, &out) == LR_OK);
  CHECK(take(out) == "90");
  REQUIRE(lr_residue_sum(5, 3, "1", "2", LR_STRATEGY_CLOSED, &out) == LR_OK);
  CHECK(take(out) == "90");
  REQUIRE(lr_delta(4, 6, "0", "-7", LR_STRATEGY_RECUR, &out) == LR_OK);
  CHECK(take(out) == std::to_string(-2 * 2401 - 12 * 49 + 4));

  out = nullptr;
  CHECK(lr_residue_sum(0, 3, "1", "2", LR_STRATEGY_DIRECT, &out) == LR_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::strlen(lr_last_error()) > 0);
  CHECK(lr_residue_sum(5, 3, "1", "two", LR_STRATEGY_DIRECT, &out) == LR_ERR_INVALID_ARGUMENT);
  CHECK(lr_residue_sum(5, 3, nullptr, "2", LR_STRATEGY_DIRECT, &out) == LR_ERR_INVALID_ARGUMENT);
  CHECK(lr_delta(5, 5, "1", "2", LR_STRATEGY_CLOSED, &out) == LR_ERR_UNSUPPORTED_MODULUS);
  CHECK(lr_delta(5, 6, "1", "0", LR_STRATEGY_CLOSED, &out) == LR_ERR_ZERO_A);
  CHECK(lr_residue_sum(5, 3, "1", "2", static_cast<lr_strategy>(9), &out) == LR_ERR_INVALID_ARGUMENT);

  lr_strategy s;
  CHECK(lr_parse_strategy("recur", &s) == LR_OK);
  CHECK(s == LR_STRATEGY_RECUR);
  CHECK(lr_parse_strategy("nope", &s) == LR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api: status strings") {
  for (int s = LR_OK; s <= LR_ERR_INTERNAL; ++s) CHECK(std::strlen(lr_status_string(static_cast<lr_status>(s))) > 0);
  CHECK(std::string(lr_version()).size() > 0);
}

TEST_CASE("c api: polynomials") {
  lr_poly* g = nullptr;
  REQUIRE(lr_poly_new(LR_POLY_G, 2, "2", &g) == LR_OK);
  CHECK(lr_poly_degree(g) == 4);
  const char* expect[] = {"11", "2", "4", "-2", "1"};
  for (size_t i = 0; i < 5; ++i) CHECK(std::string(lr_poly_coeff(g, i)) == expect[i]);
  CHECK(std::string(lr_poly_coeff(g, 9)) == "0");
  lr_poly_free(g);

  lr_reports* reports = nullptr;
  REQUIRE(lr_poly_check(LR_POLY_Q, 5, "-1", &reports) == LR_OK);
  REQUIRE(lr_reports_count(reports) == 1);
  CHECK(lr_reports_outcome(reports, 0) == LR_PASS);
  CHECK(nlohmann::json::parse(lr_reports_json(reports, 0))["check"] == "poly_q_coeffs");
  lr_reports_free(reports);
}

TEST_CASE("c api: lucas and modular") {
  char *u = nullptr, *v = nullptr;
  REQUIRE(lr_lucas_pair("-1", "1", 100, &u, &v) == LR_OK);
  CHECK(take(u) == "354224848179261915075");
  CHECK(take(v) == "792070839848372253127");
  uint64_t um = 0, vm = 0;
  REQUIRE(lr_lucas_pair_mod("-1", "1", 10, 100, &um, &vm) == LR_OK);
  CHECK(um == 55);
  CHECK(vm == 23);
  CHECK(lr_lucas_pair_mod("-1", "1", 10, 1, &um, &vm) != LR_OK);
  int eps = 9;
  REQUIRE(lr_lucas_epsilon("-1", "1", 11, &eps) == LR_OK);
  CHECK(eps == 1);
  uint64_t q = 0;
  REQUIRE(lr_lucas_quotient("-1", "1", 7, &q) == LR_OK);
  CHECK(q == 3);
  CHECK(lr_lucas_quotient("-1", "1", 5, &q) == LR_ERR_HYPOTHESIS);
  int sym = 0;
  REQUIRE(lr_legendre("-3", 7, &sym) == LR_OK);
  CHECK(sym == 1);
  REQUIRE(lr_inv_mod("2", 9, &q) == LR_OK);
  CHECK(q == 5);
  CHECK(lr_inv_mod("6", 9, &q) == LR_ERR_NOT_INVERTIBLE);
  REQUIRE(lr_fermat_quotient(5, "3", &q) == LR_OK);
  CHECK(q == 1);
  REQUIRE(lr_k_sum(7, 2, "1", "1", &q) == LR_OK);
  CHECK(q == 5);
}

TEST_CASE("c api: checks") {
  CHECK(lr_check_count() == 15);
  CHECK(lr_check_name(99) == nullptr);
  CHECK(lr_check_is_a_free("c47") == 1);
  CHECK(lr_check_is_a_free("thm_3lucas") == 0);
  CHECK(lr_check_is_a_free("bogus") == -1);

  lr_reports* reports = nullptr;
  REQUIRE(lr_check_run("c47", 5, nullptr, nullptr, &reports) == LR_OK);
  REQUIRE(lr_reports_count(reports) == 1);
  CHECK(lr_reports_outcome(reports, 0) == LR_PASS);
  lr_reports_free(reports);

  CHECK(lr_check_run("thm_3lucas", 7, nullptr, nullptr, &reports) == LR_ERR_INVALID_ARGUMENT);
  CHECK(lr_check_run("nope", 7, "1", nullptr, &reports) == LR_ERR_INVALID_ARGUMENT);

  lr_check_args* args = lr_check_args_new();
  REQUIRE(args != nullptr);
  CHECK(lr_check_args_add_m(args, 0) == LR_ERR_INVALID_ARGUMENT);
  REQUIRE(lr_check_args_add_m(args, 3) == LR_OK);
  REQUIRE(lr_check_run("lemma_binom_p", 11, "-4", args, &reports) == LR_OK);
  CHECK(lr_reports_count(reports) == 3);
  lr_reports_free(reports);
  REQUIRE(lr_check_args_set_params(args, "1", "4") == LR_OK);
  REQUIRE(lr_check_run("quotient_v", 7, nullptr, args, &reports) == LR_OK);
  CHECK(lr_reports_count(reports) == 1);
  lr_reports_free(reports);
  lr_check_args_free(args);
}

TEST_CASE("c api: scans") {
  lr_scan_result* r = nullptr;
  lr_scan_config cfg{0, 2, nullptr};
  REQUIRE(lr_wall_scan("1", "4", 3, 10000, &cfg, &r) == LR_OK);
  REQUIRE(lr_scan_result_hit_count(r) == 1);
  CHECK(nlohmann::json::parse(lr_scan_result_hit_json(r, 0))["p"] == "103");
  const auto summary = nlohmann::json::parse(lr_scan_result_summary(r, 0));
  CHECK(summary["hits"] == 1);
  CHECK(!summary.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(lr_scan_result_summary(r, 1)).contains("elapsed_ms"));
  lr_scan_result_free(r);

  CHECK(lr_wall_scan("1", "4", 2, 100, nullptr, &r) == LR_ERR_INVALID_ARGUMENT);

  const char* as[] = {"-2", "3"};
  REQUIRE(lr_verify_sweep("thm_4lucas", as, 2, 3, 300, nullptr, nullptr, &r) == LR_OK);
  CHECK(lr_scan_result_hit_count(r) == 0);
  CHECK(lr_scan_result_report_count(r) > 0);
  CHECK(nlohmann::json::parse(lr_scan_result_summary(r, 0))["failed"] == 0);
  lr_scan_result_free(r);

  uint64_t* primes = nullptr;
  size_t count = 0;
  REQUIRE(lr_primes(2, 30, &primes, &count) == LR_OK);
  CHECK(count == 10);
  CHECK(primes[9] == 29);
  lr_primes_free(primes);
}

TEST_CASE("c api: null handles are tolerated") {
  lr_poly_free(nullptr);
  lr_reports_free(nullptr);
  lr_scan_result_free(nullptr);
  lr_check_args_free(nullptr);
  lr_string_free(nullptr);
  CHECK(lr_reports_count(nullptr) == 0);
  CHECK(lr_scan_result_summary(nullptr, 0) == nullptr);
}
