/* burau_atlas: exact-arithmetic computations in the Burau image of the
 * 3-string braid group -- universal-subgroup coset enumeration over finite
 * quotient rings, local Alexander-module classifiers, and the exceptional
 * factor search.
 *
 * All functions return BA_OK (0) on success or a nonzero error code; the
 * per-thread message for the last failure is available via ba_last_error().
 * Strings returned through char** out-parameters are heap-allocated by the
 * library and must be released with ba_string_free(). Result objects are
 * opaque handles released with their _free function.
 */
#ifndef BURAU_ATLAS_H
#define BURAU_ATLAS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    BA_OK = 0,
    BA_E_INVALID = 1,  /* malformed input: parse error, bad range, null pointer */
    BA_E_DOMAIN = 2,   /* algebraic precondition violated (reducible minimal
                          polynomial, non-unit specialization point, ...) */
    BA_E_CAP = 3,      /* enumeration class cap exceeded */
    BA_E_INTERNAL = 4
};

const char* ba_last_error(void);
void ba_string_free(char* s);

/* Parse a polynomial in t with integer coefficients and reprint it in
 * canonical form (descending exponents, explicit signs). */
int ba_poly_canonical(const char* text, char** out);

/* ---- coset enumeration of universal subgroups ---- */

typedef struct ba_enum_result ba_enum_result;

/* modulus must be prime and min_poly irreducible over F_modulus (the message
 * lists the factors otherwise). braid_mode 0 enumerates in the extended group,
 * 1 in the braid group. v_pair selects the module line as "a;b" with
 * polynomial entries evaluated at the class of t; NULL means e2. cap bounds
 * the class count; BA_E_CAP is reported through ba_enum_cap_exceeded, not as
 * a call failure. */
int ba_enumerate(uint64_t modulus, const char* min_poly, int braid_mode, const char* v_pair, uint64_t cap,
                 ba_enum_result** out);
void ba_enum_result_free(ba_enum_result* r);

int ba_enum_cap_exceeded(const ba_enum_result* r);
uint32_t ba_enum_index(const ba_enum_result* r);
long ba_enum_genus(const ba_enum_result* r);
uint32_t ba_enum_c2(const ba_enum_result* r);
uint32_t ba_enum_c3(const ba_enum_result* r);
int ba_enum_six_significant(const ba_enum_result* r);
int ba_enum_json(const ba_enum_result* r, char** out);
int ba_enum_dot(const ba_enum_result* r, char** out);

/* ---- exceptional-factor search ---- */

typedef struct ba_search_result ba_search_result;

int ba_search(unsigned n_min, unsigned n_max, int char0_only, uint64_t enum_cap, ba_search_result** out);
void ba_search_result_free(ba_search_result* r);

uint32_t ba_search_candidate_count(const ba_search_result* r);
uint32_t ba_search_genus0_count(const ba_search_result* r);
uint32_t ba_search_genuspos_count(const ba_search_result* r);
uint32_t ba_search_warning_count(const ba_search_result* r);
/* 1 when the kept candidates reproduce the built-in tables exactly */
int ba_search_expect_tables_ok(const ba_search_result* r);
int ba_search_json(const ba_search_result* r, char** out);

/* ---- local Alexander-module classifiers ---- */

int ba_classify_trivalent(uint64_t modulus, const char* min_poly, long m, long n, long r, long s, char** json_out);
int ba_classify_black(uint64_t modulus, const char* min_poly, long r, char** json_out);
int ba_classify_white(uint64_t modulus, const char* min_poly, long r, char** json_out);

/* ---- identity suites and the N = 7, 9 elimination ---- */

/* suite: "all", "burau", "freegroup", or "localgeom" */
int ba_verify(const char* suite, char** json_out, int* all_ok);

/* target: 14, 18, or 0 for both */
int ba_n79(unsigned target, char** json_out, int* all_nonzero);

#ifdef __cplusplus
}
#endif

#endif /* BURAU_ATLAS_H */
