/*
 * planar2 — planar functions over GF(2^r): planarity deciders for monomials,
 * exhaustive theorem verifiers, and searches for planar monomials.
 *
 * All state lives behind opaque handles; every function returns a status
 * code and writes results through out-parameters. Field elements cross the
 * boundary as integer encodings (bit i = coefficient of x^i in the
 * polynomial basis of the field's modulus). Reports serialize to canonical
 * JSON: sorted keys, no insignificant whitespace, newline-terminated.
 */

#ifndef PLANAR2_H
#define PLANAR2_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PLANAR2_API __declspec(dllexport)
#else
#define PLANAR2_API __attribute__((visibility("default")))
#endif

typedef enum planar2_status {
    PLANAR2_OK = 0,
    PLANAR2_ERR_USAGE = 1,      /* bad arguments, mismatched parameters */
    PLANAR2_ERR_DOMAIN = 2,     /* mathematically undefined input (e.g. inv(0)) */
    PLANAR2_ERR_CAPABILITY = 3, /* needs a resource that was not built (dlog table) */
    PLANAR2_ERR_IO = 4,         /* file I/O, corrupt or mismatched progress files */
    PLANAR2_ERR_NOMEM = 5,
    PLANAR2_ERR_INTERNAL = 6
} planar2_status;

typedef enum planar2_search_mode {
    PLANAR2_SEARCH_ALL_DEGREES = 0,
    PLANAR2_SEARCH_QUADRATIC = 1
} planar2_search_mode;

typedef struct planar2_field planar2_field;
typedef struct planar2_report planar2_report;

PLANAR2_API const char* planar2_version(void);
PLANAR2_API const char* planar2_status_name(planar2_status status);

/* Human-readable detail for the most recent failure on this thread. */
PLANAR2_API const char* planar2_last_error(void);

/* ------------------------------------------------------------------ */
/* Field construction and element arithmetic                          */
/* ------------------------------------------------------------------ */

/* GF(2^r) with the smallest-encoding irreducible modulus and generator;
 * the discrete-log table is built iff q-1 <= 2^26. */
PLANAR2_API planar2_status planar2_field_create(uint32_t r, planar2_field** out);

/* Variant with an explicit generator (0 = default) and log-table cap
 * (build the table iff q-1 <= cap; 0 disables it). */
PLANAR2_API planar2_status planar2_field_create_ex(uint32_t r, uint64_t generator_enc,
                                                   uint64_t log_table_cap, planar2_field** out);

PLANAR2_API void planar2_field_destroy(planar2_field* f);

PLANAR2_API uint32_t planar2_field_degree(const planar2_field* f);
PLANAR2_API uint64_t planar2_field_order(const planar2_field* f);
PLANAR2_API uint64_t planar2_field_modulus(const planar2_field* f);
PLANAR2_API uint64_t planar2_field_generator(const planar2_field* f);
PLANAR2_API int planar2_field_has_log_table(const planar2_field* f);

PLANAR2_API planar2_status planar2_field_add(const planar2_field* f, uint64_t x, uint64_t y,
                                             uint64_t* out);
PLANAR2_API planar2_status planar2_field_mul(const planar2_field* f, uint64_t x, uint64_t y,
                                             uint64_t* out);
PLANAR2_API planar2_status planar2_field_inv(const planar2_field* f, uint64_t x, uint64_t* out);

/* x^n, exponent reduced mod q-1 for nonzero x; negative n = inverse powers;
 * 0^0 = 1 and 0^n = 0 for n > 0. */
PLANAR2_API planar2_status planar2_field_pow(const planar2_field* f, uint64_t x, int64_t n,
                                             uint64_t* out);
PLANAR2_API planar2_status planar2_field_trace(const planar2_field* f, uint64_t x, uint64_t* out);
PLANAR2_API planar2_status planar2_field_partial_trace(const planar2_field* f, uint64_t x,
                                                       uint32_t j, uint64_t* out);
PLANAR2_API planar2_status planar2_field_is_kth_power(const planar2_field* f, uint64_t x,
                                                      uint64_t k, int* out);
PLANAR2_API planar2_status planar2_field_dlog(const planar2_field* f, uint64_t x, uint64_t* out);
PLANAR2_API planar2_status planar2_field_exp(const planar2_field* f, uint64_t n, uint64_t* out);
PLANAR2_API planar2_status planar2_field_in_subfield(const planar2_field* f, uint64_t x,
                                                     uint32_t m, int* out);

/* Inspection report for the field itself (the `field` CLI command). */
PLANAR2_API planar2_status planar2_field_report(const planar2_field* f, int show_modulus,
                                                planar2_report** out);

/* ------------------------------------------------------------------ */
/* Planarity checks                                                    */
/* ------------------------------------------------------------------ */

/* Definition check of a full function table (len must equal the field order). */
PLANAR2_API planar2_status planar2_check_table(const planar2_field* f, const uint64_t* table,
                                               uint64_t len, planar2_report** out);

/* Coset-reduced check of c -> a * c^t (t >= 1, reduced mod q-1). */
PLANAR2_API planar2_status planar2_check_monomial(const planar2_field* f, uint64_t t,
                                                  uint64_t a_enc, planar2_report** out);

/* Image-set disjointness check of c -> a * c^(2^i + 2^j), 0 <= i < j < r. */
PLANAR2_API planar2_status planar2_check_quadratic(const planar2_field* f, uint32_t i, uint32_t j,
                                                   uint64_t a_enc, planar2_report** out);

/* Rank of the GF(2)-linear map c -> c^(2^i) + c^(2^j) + s*c; writes a
 * nonzero kernel element when not bijective. */
PLANAR2_API planar2_status planar2_linearized_bijective(const planar2_field* f, uint32_t i,
                                                        uint32_t j, uint64_t s_enc, int* bijective,
                                                        uint64_t* kernel_enc);

/* ------------------------------------------------------------------ */
/* Theorem verifiers (jobs: 0 = available parallelism)                 */
/* ------------------------------------------------------------------ */

PLANAR2_API planar2_status planar2_verify_fermat(uint32_t Q, uint32_t jobs, planar2_report** out);
PLANAR2_API planar2_status planar2_verify_theorem1(uint32_t k, uint32_t jobs,
                                                   planar2_report** out);
PLANAR2_API planar2_status planar2_verify_no_de(uint32_t k, uint64_t a_enc, uint32_t jobs,
                                                planar2_report** out);
PLANAR2_API planar2_status planar2_verify_prop_odd(uint32_t r, uint32_t jobs,
                                                   planar2_report** out);
PLANAR2_API planar2_status planar2_verify_identities(uint32_t m, planar2_report** out);
PLANAR2_API planar2_status planar2_verify_root_d(uint32_t m, planar2_report** out);
PLANAR2_API planar2_status planar2_verify_minpoly(uint32_t Q, uint32_t jobs,
                                                  planar2_report** out);

/* has_a = 0 checks every nonzero coefficient. */
PLANAR2_API planar2_status planar2_verify_curve(uint32_t r, uint32_t J, int has_a, uint64_t a_enc,
                                                uint32_t jobs, planar2_report** out);
PLANAR2_API planar2_status planar2_verify_weil_gap(uint32_t r, uint32_t J, planar2_report** out);

/* ------------------------------------------------------------------ */
/* Searches                                                            */
/* ------------------------------------------------------------------ */

/* out_path/progress_path may be NULL. format is "json" or "csv" and governs
 * the file written to out_path; emitted files are byte-identical across
 * runs and worker counts. resume != 0 skips units recorded in the progress
 * sidecar (which must match r, mode and modulus). large != 0 raises the
 * degree cap (all-degrees: 12 -> 14, quadratic: 16 -> 24). */
PLANAR2_API planar2_status planar2_search(uint32_t r, planar2_search_mode mode, uint32_t jobs,
                                          const char* out_path, const char* format,
                                          const char* progress_path, int resume, int large,
                                          planar2_report** out);

/* ------------------------------------------------------------------ */
/* Reports                                                             */
/* ------------------------------------------------------------------ */

/* 1 = pass/planar, 0 = verified counterexample or non-planar. */
PLANAR2_API int planar2_report_passed(const planar2_report* rep);

/* Canonical JSON report envelope; free with planar2_string_free. */
PLANAR2_API planar2_status planar2_report_to_json(const planar2_report* rep, char** out);

/* CSV (r,t,i,j,a_enc,planar); only valid for search reports. */
PLANAR2_API planar2_status planar2_report_to_csv(const planar2_report* rep, char** out);

PLANAR2_API void planar2_report_destroy(planar2_report* rep);
PLANAR2_API void planar2_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PLANAR2_H */
