#ifndef LUCASRES_H
#define LUCASRES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LR_API __declspec(dllexport)
#else
#define LR_API __attribute__((visibility("default")))
#endif

/* Integers that can exceed 64 bits cross the boundary as decimal strings.
   Strings returned through char** are malloc'd; release them with
   lr_string_free. Strings returned as const char* belong to their handle. */

typedef enum lr_status {
  LR_OK = 0,
  LR_ERR_INVALID_ARGUMENT,
  LR_ERR_HYPOTHESIS,
  LR_ERR_UNSATISFIABLE,
  LR_ERR_NOT_INVERTIBLE,
  LR_ERR_UNSUPPORTED_MODULUS,
  LR_ERR_ZERO_A,
  LR_ERR_DIVISIBILITY,
  LR_ERR_INEXACT_DIVISION,
  LR_ERR_IO,
  LR_ERR_INTERNAL
} lr_status;

typedef enum lr_strategy { LR_STRATEGY_DIRECT = 0, LR_STRATEGY_RECUR, LR_STRATEGY_CLOSED } lr_strategy;

typedef enum lr_poly_kind { LR_POLY_G = 0, LR_POLY_Q } lr_poly_kind;

typedef enum lr_outcome { LR_PASS = 0, LR_FAIL, LR_SKIPPED, LR_UNSATISFIABLE } lr_outcome;

typedef struct lr_poly lr_poly;
typedef struct lr_reports lr_reports;
typedef struct lr_check_args lr_check_args;
typedef struct lr_scan_result lr_scan_result;

typedef struct lr_scan_config {
  uint64_t segment_size; /* 0 picks the default */
  unsigned threads;      /* 0 defers to LUCAS_RESIDUE_THREADS, then the core count */
  const char* checkpoint; /* NULL for none */
} lr_scan_config;

LR_API const char* lr_version(void);
LR_API const char* lr_status_string(lr_status status);
/* Message of the last failure on this thread. */
LR_API const char* lr_last_error(void);
LR_API void lr_string_free(char* s);

LR_API lr_status lr_parse_strategy(const char* name, lr_strategy* out);

/* [n r]_m(a) and Delta_m(r, n). */
LR_API lr_status lr_residue_sum(uint64_t n, uint64_t m, const char* r, const char* a, lr_strategy strategy,
                                char** out);
LR_API lr_status lr_delta(uint64_t n, uint64_t m, const char* r, const char* a, lr_strategy strategy,
                          char** out);

LR_API lr_status lr_poly_new(lr_poly_kind kind, uint64_t n, const char* a, lr_poly** out);
LR_API void lr_poly_free(lr_poly* poly);
/* -1 for the zero polynomial. */
LR_API long lr_poly_degree(const lr_poly* poly);
/* Coefficient of x^i, ascending. */
LR_API const char* lr_poly_coeff(const lr_poly* poly, size_t i);
LR_API lr_status lr_poly_check(lr_poly_kind kind, uint64_t n, const char* a, lr_reports** out);

LR_API lr_status lr_lucas_pair(const char* A, const char* B, uint64_t n, char** u, char** v);
LR_API lr_status lr_lucas_pair_mod(const char* A, const char* B, uint64_t n, uint64_t modulus, uint64_t* u,
                                   uint64_t* v);
LR_API lr_status lr_lucas_epsilon(const char* A, const char* B, uint64_t p, int* out);
/* u_{p-eps}/p mod p. */
LR_API lr_status lr_lucas_quotient(const char* A, const char* B, uint64_t p, uint64_t* out);

LR_API lr_status lr_legendre(const char* x, uint64_t p, int* out);
LR_API lr_status lr_inv_mod(const char* x, uint64_t modulus, uint64_t* out);
LR_API lr_status lr_fermat_quotient(uint64_t p, const char* x, uint64_t* out);
LR_API lr_status lr_k_sum(uint64_t p, uint64_t m, const char* r, const char* a, uint64_t* out);

/* Check identifiers, e.g. "thm_3lucas". */
LR_API size_t lr_check_count(void);
LR_API const char* lr_check_name(size_t i);
/* 1 if the check has no free parameter a, 0 if it has one, -1 if unknown. */
LR_API int lr_check_is_a_free(const char* check);

LR_API lr_check_args* lr_check_args_new(void);
LR_API void lr_check_args_free(lr_check_args* args);
/* Explicit (A, B) for quotient_v. */
LR_API lr_status lr_check_args_set_params(lr_check_args* args, const char* A, const char* B);
/* Moduli for lemma_binom_p and fermat_props; replaces the defaults on first use. */
LR_API lr_status lr_check_args_add_m(lr_check_args* args, uint64_t m);

/* All reports of one check at (p, a). args may be NULL; a is ignored by a-free checks. */
LR_API lr_status lr_check_run(const char* check, uint64_t p, const char* a, const lr_check_args* args,
                              lr_reports** out);
LR_API void lr_reports_free(lr_reports* reports);
LR_API size_t lr_reports_count(const lr_reports* reports);
LR_API lr_outcome lr_reports_outcome(const lr_reports* reports, size_t i);
LR_API const char* lr_reports_json(const lr_reports* reports, size_t i);

LR_API lr_status lr_wall_scan(const char* A, const char* B, uint64_t lo, uint64_t hi, const lr_scan_config* config,
                              lr_scan_result** out);
LR_API lr_status lr_verify_sweep(const char* check, const char* const* a_values, size_t a_count, uint64_t lo,
                                 uint64_t hi, const lr_check_args* args, const lr_scan_config* config,
                                 lr_scan_result** out);
LR_API void lr_scan_result_free(lr_scan_result* result);
/* Wall hits or sweep failures. */
LR_API size_t lr_scan_result_hit_count(const lr_scan_result* result);
LR_API size_t lr_scan_result_report_count(const lr_scan_result* result);
/* One JSON line per hit (wall) or failed report (sweep), ascending. */
LR_API const char* lr_scan_result_hit_json(const lr_scan_result* result, size_t i);
/* Every sweep report, including passes and skips. */
LR_API const char* lr_scan_result_report_json(const lr_scan_result* result, size_t i);
LR_API const char* lr_scan_result_summary(lr_scan_result* result, int include_elapsed);

/* Primes in [lo, hi]; *out is malloc'd, release with lr_primes_free. */
LR_API lr_status lr_primes(uint64_t lo, uint64_t hi, uint64_t** out, size_t* count);
LR_API void lr_primes_free(uint64_t* primes);

#ifdef __cplusplus
}
#endif

#endif  /* LUCASRES_H */
