#include "lucasres/lucasres.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "lucasres/bigint.hpp"
#include "lucasres/combsum.hpp"
#include "lucasres/errors.hpp"
#include "lucasres/lucas.hpp"
#include "lucasres/modular.hpp"
#include "lucasres/polyseq.hpp"
#include "lucasres/report.hpp"
#include "lucasres/scanner.hpp"
#include "lucasres/verify.hpp"

using namespace lucasres;

struct lr_poly {
  IntPoly poly;
  std::vector<std::string> coeffs;
};

struct lr_reports {
  std::vector<CheckReport> reports;
  std::vector<std::string> json;
};

struct lr_check_args {
  SweepSettings settings;
};

struct lr_scan_result {
  ScanResult result;
  std::vector<std::string> hit_json;
  std::vector<std::string> report_json;
  std::string summary;
};

namespace {

thread_local std::string last_error;

lr_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return LR_ERR_INVALID_ARGUMENT;
    case ErrorCode::HypothesisViolation: return LR_ERR_HYPOTHESIS;
    case ErrorCode::UnsatisfiableHypothesis: return LR_ERR_UNSATISFIABLE;
    case ErrorCode::NotInvertible: return LR_ERR_NOT_INVERTIBLE;
    case ErrorCode::UnsupportedModulus: return LR_ERR_UNSUPPORTED_MODULUS;
    case ErrorCode::ZeroA: return LR_ERR_ZERO_A;
    case ErrorCode::InternalDivisibilityFailure: return LR_ERR_DIVISIBILITY;
    case ErrorCode::InexactDivision: return LR_ERR_INEXACT_DIVISION;
    case ErrorCode::Io: return LR_ERR_IO;
  }
  return LR_ERR_INTERNAL;
}

template <class F>
lr_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LR_ERR_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  if (ptr == nullptr) raise(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

BigInt arg(const char* s, const char* what) {
  need(s, what);
  return parse_bigint(s);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Strategy to_strategy(lr_strategy s) {
  switch (s) {
    case LR_STRATEGY_DIRECT: return Strategy::Direct;
    case LR_STRATEGY_RECUR: return Strategy::Recur;
    case LR_STRATEGY_CLOSED: return Strategy::Closed;
  }
  raise(ErrorCode::InvalidArgument, "unknown strategy");
}

CheckId check_arg(const char* name) {
  need(name, "check");
  auto id = parse_check_id(name);
  if (!id) raise(ErrorCode::InvalidArgument, std::string("unknown check '") + name + "'");
  return *id;
}

LucasParams params_arg(const char* A, const char* B) { return LucasParams(arg(A, "A"), arg(B, "B")); }

lr_reports* wrap(std::vector<CheckReport> reports) {
  auto* out = new lr_reports{std::move(reports), {}};
  for (const auto& r : out->reports) out->json.push_back(to_json_line(r));
  return out;
}

ScanOptions options_arg(const lr_scan_config* config) {
  ScanOptions options;
  if (config == nullptr) return options;
  if (config->segment_size != 0) options.segment_size = config->segment_size;
  options.threads = config->threads;
  if (config->checkpoint != nullptr) options.checkpoint = std::filesystem::path(config->checkpoint);
  return options;
}

lr_scan_result* wrap(ScanResult result) {
  auto* out = new lr_scan_result{std::move(result), {}, {}, {}};
  if (out->result.kind == "wall") {
    for (const auto& h : out->result.wall_hits) out->hit_json.push_back(wall_hit_json_line(h));
  } else {
    for (const auto& r : out->result.reports) {
      out->report_json.push_back(to_json_line(r));
      if (r.outcome() == Outcome::Fail) out->hit_json.push_back(out->report_json.back());
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* lr_version(void) { return "0.1.0"; }

const char* lr_status_string(lr_status status) {
  switch (status) {
    case LR_OK: return "ok";
    case LR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LR_ERR_HYPOTHESIS: return "hypothesis violation";
    case LR_ERR_UNSATISFIABLE: return "unsatisfiable hypothesis";
    case LR_ERR_NOT_INVERTIBLE: return "not invertible";
    case LR_ERR_UNSUPPORTED_MODULUS: return "unsupported modulus";
    case LR_ERR_ZERO_A: return "a must be nonzero";
    case LR_ERR_DIVISIBILITY: return "internal divisibility failure";
    case LR_ERR_INEXACT_DIVISION: return "inexact division";
    case LR_ERR_IO: return "i/o error";
    case LR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lr_last_error(void) { return last_error.c_str(); }

void lr_string_free(char* s) { std::free(s); }

lr_status lr_parse_strategy(const char* name, lr_strategy* out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    auto s = parse_strategy(name);
    if (!s) raise(ErrorCode::InvalidArgument, std::string("unknown strategy '") + name + "'");
    *out = *s == Strategy::Direct ? LR_STRATEGY_DIRECT : *s == Strategy::Recur ? LR_STRATEGY_RECUR : LR_STRATEGY_CLOSED;
  });
}

lr_status lr_residue_sum(uint64_t n, uint64_t m, const char* r, const char* a, lr_strategy strategy, char** out) {
  return guarded([&] {
    need(out, "out");
    auto spec = SumSpec::make(n, m, arg(r, "r"), arg(a, "a"));
    *out = dup(to_string(residue_sum(spec, to_strategy(strategy))));
  });
}

lr_status lr_delta(uint64_t n, uint64_t m, const char* r, const char* a, lr_strategy strategy, char** out) {
  return guarded([&] {
    need(out, "out");
    auto spec = SumSpec::make(n, m, arg(r, "r"), arg(a, "a"));
    *out = dup(to_string(delta(spec, to_strategy(strategy))));
  });
}

lr_status lr_poly_new(lr_poly_kind kind, uint64_t n, const char* a, lr_poly** out) {
  return guarded([&] {
    need(out, "out");
    const BigInt av = arg(a, "a");
    auto* poly = new lr_poly{kind == LR_POLY_G ? poly_G(n, av) : poly_Q(n, av), {}};
    for (const auto& c : poly->poly.coeffs()) poly->coeffs.push_back(to_string(c));
    *out = poly;
  });
}

void lr_poly_free(lr_poly* poly) { delete poly; }

long lr_poly_degree(const lr_poly* poly) { return poly == nullptr ? -1 : poly->poly.degree(); }

const char* lr_poly_coeff(const lr_poly* poly, size_t i) {
  if (poly == nullptr) return nullptr;
  return i < poly->coeffs.size() ? poly->coeffs[i].c_str() : "0";
}

lr_status lr_poly_check(lr_poly_kind kind, uint64_t n, const char* a, lr_reports** out) {
  return guarded([&] {
    need(out, "out");
    const BigInt av = arg(a, "a");
    *out = wrap({kind == LR_POLY_G ? check_G_coeffs(n, av) : check_Q_coeffs(n, av)});
  });
}

lr_status lr_lucas_pair(const char* A, const char* B, uint64_t n, char** u, char** v) {
  return guarded([&] {
    need(u, "u");
    need(v, "v");
    auto pair = lucas_pair(params_arg(A, B), n);
    std::string us = to_string(pair.u), vs = to_string(pair.v);
    *u = dup(us);
    *v = dup(vs);
  });
}

lr_status lr_lucas_pair_mod(const char* A, const char* B, uint64_t n, uint64_t modulus, uint64_t* u, uint64_t* v) {
  return guarded([&] {
    need(u, "u");
    need(v, "v");
    auto [ur, vr] = lucas_pair_mod(params_arg(A, B), n, modulus);
    *u = ur.value();
    *v = vr.value();
  });
}

lr_status lr_lucas_epsilon(const char* A, const char* B, uint64_t p, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = lucas_epsilon(params_arg(A, B), p);
  });
}

lr_status lr_lucas_quotient(const char* A, const char* B, uint64_t p, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = lucas_quotient_mod_p(params_arg(A, B), p).value();
  });
}

lr_status lr_legendre(const char* x, uint64_t p, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = legendre(arg(x, "x"), p);
  });
}

lr_status lr_inv_mod(const char* x, uint64_t modulus, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = inv_mod(arg(x, "x"), modulus).value();
  });
}

lr_status lr_fermat_quotient(uint64_t p, const char* x, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = fermat_quotient(p, arg(x, "x")).value();
  });
}

lr_status lr_k_sum(uint64_t p, uint64_t m, const char* r, const char* a, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = k_sum(p, m, arg(r, "r"), arg(a, "a")).value();
  });
}

size_t lr_check_count(void) { return all_check_ids().size(); }

const char* lr_check_name(size_t i) {
  const auto& ids = all_check_ids();
  return i < ids.size() ? check_id_name(ids[i]).data() : nullptr;
}

int lr_check_is_a_free(const char* check) {
  if (check == nullptr) return -1;
  auto id = parse_check_id(check);
  if (!id) return -1;
  return is_a_free(*id) ? 1 : 0;
}

lr_check_args* lr_check_args_new(void) { return new (std::nothrow) lr_check_args{}; }

void lr_check_args_free(lr_check_args* args) { delete args; }

lr_status lr_check_args_set_params(lr_check_args* args, const char* A, const char* B) {
  return guarded([&] {
    need(args, "args");
    args->settings.params = params_arg(A, B);
  });
}

lr_status lr_check_args_add_m(lr_check_args* args, uint64_t m) {
  return guarded([&] {
    need(args, "args");
    if (m == 0) raise(ErrorCode::InvalidArgument, "m must be positive");
    args->settings.m_values.push_back(m);
  });
}

lr_status lr_check_run(const char* check, uint64_t p, const char* a, const lr_check_args* args, lr_reports** out) {
  return guarded([&] {
    need(out, "out");
    const CheckId id = check_arg(check);
    const BigInt av = a == nullptr ? BigInt(0) : parse_bigint(a);
    if (a == nullptr && !is_a_free(id) && !(id == CheckId::QuotientV && args && args->settings.params))
      raise(ErrorCode::InvalidArgument, std::string("check '") + check + "' needs a value for a");
    const SweepSettings settings = args ? args->settings : SweepSettings{};
    *out = wrap(run_check_point(id, p, av, settings));
  });
}

void lr_reports_free(lr_reports* reports) { delete reports; }

size_t lr_reports_count(const lr_reports* reports) { return reports ? reports->reports.size() : 0; }

lr_outcome lr_reports_outcome(const lr_reports* reports, size_t i) {
  switch (reports->reports.at(i).outcome()) {
    case Outcome::Pass: return LR_PASS;
    case Outcome::Fail: return LR_FAIL;
    case Outcome::Skipped: return LR_SKIPPED;
    case Outcome::Unsatisfiable: return LR_UNSATISFIABLE;
  }
  return LR_FAIL;
}

const char* lr_reports_json(const lr_reports* reports, size_t i) {
  if (reports == nullptr || i >= reports->json.size()) return nullptr;
  return reports->json[i].c_str();
}

lr_status lr_wall_scan(const char* A, const char* B, uint64_t lo, uint64_t hi, const lr_scan_config* config,
                       lr_scan_result** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(wall_scan(WallJob{params_arg(A, B), lo, hi}, options_arg(config)));
  });
}

lr_status lr_verify_sweep(const char* check, const char* const* a_values, size_t a_count, uint64_t lo, uint64_t hi,
                          const lr_check_args* args, const lr_scan_config* config, lr_scan_result** out) {
  return guarded([&] {
    need(out, "out");
    if (a_count > 0) need(a_values, "a_values");
    SweepJob job{check_arg(check), {}, lo, hi, args ? args->settings : SweepSettings{}};
    for (size_t i = 0; i < a_count; ++i) job.a_values.push_back(arg(a_values[i], "a value"));
    *out = wrap(verify_sweep(job, options_arg(config)));
  });
}

void lr_scan_result_free(lr_scan_result* result) { delete result; }

size_t lr_scan_result_hit_count(const lr_scan_result* result) { return result ? result->hit_json.size() : 0; }

size_t lr_scan_result_report_count(const lr_scan_result* result) { return result ? result->report_json.size() : 0; }

const char* lr_scan_result_hit_json(const lr_scan_result* result, size_t i) {
  if (result == nullptr || i >= result->hit_json.size()) return nullptr;
  return result->hit_json[i].c_str();
}

const char* lr_scan_result_report_json(const lr_scan_result* result, size_t i) {
  if (result == nullptr || i >= result->report_json.size()) return nullptr;
  return result->report_json[i].c_str();
}

const char* lr_scan_result_summary(lr_scan_result* result, int include_elapsed) {
  if (result == nullptr) return nullptr;
  result->summary = summary_json_line(result->result, include_elapsed != 0);
  return result->summary.c_str();
}

lr_status lr_primes(uint64_t lo, uint64_t hi, uint64_t** out, size_t* count) {
  return guarded([&] {
    need(out, "out");
    need(count, "count");
    const auto primes = prime_stream(lo, hi);
    auto* buf = static_cast<uint64_t*>(std::malloc(std::max<size_t>(1, primes.size()) * sizeof(uint64_t)));
    if (buf == nullptr) throw std::bad_alloc();
    std::copy(primes.begin(), primes.end(), buf);
    *out = buf;
    *count = primes.size();
  });
}

void lr_primes_free(uint64_t* primes) { std::free(primes); }

}  // extern "C"
