#ifndef BK_BK_H
#define BK_BK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_ERR_PARSE = 1,     /* malformed block, weight, matching or element */
  BK_ERR_DOMAIN = 2,    /* well-formed input outside the supported domain */
  BK_ERR_INVARIANT = 3, /* internal consistency check failed */
  BK_ERR_VERIFY = 4,    /* a verification suite found a counterexample */
  BK_ERR_NULL = 5,      /* required pointer argument was NULL */
  BK_ERR_INTERNAL = 6
} bk_status;

typedef enum bk_format { BK_FORMAT_JSON = 0, BK_FORMAT_ASCII = 1 } bk_format;

typedef struct bk_algebra bk_algebra;
typedef struct bk_bimodule bk_bimodule;

typedef struct bk_verify_options {
  int max_stars;
  int max_crosses;
  uint64_t seed;
  int jobs;
  long long samples;
  int64_t modulus;
} bk_verify_options;

/* Message of the last failed call on this thread, "" if none. */
BK_API const char* bk_last_error(void);
/* Every char* returned through an out parameter must be released here. */
BK_API void bk_string_free(char* s);

/* Blocks, weights and matchings accept JSON or the ASCII literals "**ox",
   "-1:v^" and "**ox;+a_i@2". */
BK_API bk_status bk_algebra_new(const char* block, bk_algebra** out);
BK_API void bk_algebra_free(bk_algebra* a);
BK_API bk_status bk_algebra_dimension(const bk_algebra* a, size_t* out);
BK_API bk_status bk_algebra_basis(const bk_algebra* a, bk_format fmt, char** out);
/* x and y are basis indices ("3") or element JSON. modulus 0 keeps integers. */
BK_API bk_status bk_algebra_mult(const bk_algebra* a, const char* x, const char* y, int64_t modulus, bk_format fmt, char** out);
BK_API bk_status bk_algebra_table(const bk_algebra* a, int64_t modulus, bk_format fmt, char** out);
BK_API bk_status bk_algebra_poincare(const bk_algebra* a, char** out);
BK_API bk_status bk_algebra_idempotents(const bk_algebra* a, bk_format fmt, char** out);

BK_API bk_status bk_bimodule_new(const char* matching, bk_bimodule** out);
BK_API void bk_bimodule_free(bk_bimodule* m);
BK_API bk_status bk_bimodule_dimension(const bk_bimodule* m, size_t* out);
BK_API bk_status bk_bimodule_basis(const bk_bimodule* m, bk_format fmt, char** out);
/* a * m * b; a or b may be NULL to skip that side. */
BK_API bk_status bk_bimodule_act(const bk_bimodule* m, const char* a, const char* elem, const char* b, bk_format fmt, char** out);

/* Composite matching of a generator word such as "F2 E1^(2)", or "null" when
   the word acts as zero. */
BK_API bk_status bk_howe(const char* block, const char* word, bk_format fmt, char** out);
/* Internal phantom edge counts of every circle of lambda mu*, compared with
   the closed formulas. Returns BK_ERR_VERIFY when a count disagrees. */
BK_API bk_status bk_ipe_check(const char* lambda, const char* mu, bk_format fmt, char** out);

BK_API void bk_verify_options_default(bk_verify_options* opt);
/* suites is a space separated list of suite names, or NULL/"" for all.
   Returns BK_ERR_VERIFY when any suite fails; *out is filled either way. */
BK_API bk_status bk_verify(const char* suites, const bk_verify_options* opt, bk_format fmt, char** out);
/* Space separated list of suite names. */
BK_API const char* bk_verify_suites(void);

#ifdef __cplusplus
}
#endif

#endif
