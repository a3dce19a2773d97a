/*
 * charclass: Segre, SM-Segre, Chern-Schwartz-MacPherson, Fulton and Milnor
 * classes of subschemes of projective space, computed from a homogeneous
 * ideal.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a cc_status; on
 * failure a message is available from cc_context_last_error() for calls that
 * take a context. Strings returned through char** are heap-allocated and must
 * be released with cc_string_free().
 *
 * A cc_context is not safe for concurrent use from several threads; distinct
 * contexts are independent. Ideal, class and report handles are immutable.
 *
 * Classes live in A_*(P^n) = Z[H]/(H^{n+1}) and are addressed by codimension:
 * coefficient p multiplies H^p, the class of a linear subspace of dimension
 * n - p.
 */
#ifndef CHARCLASS_H
#define CHARCLASS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CHARCLASS_BUILDING_LIBRARY)
#    define CHARCLASS_API __declspec(dllexport)
#  else
#    define CHARCLASS_API __declspec(dllimport)
#  endif
#else
#  define CHARCLASS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_ERR_PARSE = 1,
  CC_ERR_INVALID_INPUT = 2,
  CC_ERR_DIMENSION_MISMATCH = 3,
  CC_ERR_IO = 4,
  CC_ERR_BAD_PRIME = 5,
  CC_ERR_NOT_ZERO_DIMENSIONAL = 6,
  CC_ERR_GENERICITY = 7,
  CC_ERR_TRIAL_DISAGREEMENT = 8,
  CC_ERR_BUDGET = 9,
  CC_ERR_SUBSET_CAP = 10,
  CC_ERR_INTERNAL = 11,
  CC_ERR_NULL_ARGUMENT = 12,
  CC_ERR_OUT_OF_RANGE = 13
} cc_status;

typedef enum cc_class_kind {
  CC_CLASS_SEGRE = 0,
  CC_CLASS_SM_SEGRE = 1,
  CC_CLASS_CSM = 2,
  CC_CLASS_FULTON = 3,
  CC_CLASS_MILNOR_MEASURE = 4,
  CC_CLASS_MILNOR = 5
} cc_class_kind;

/* Bit flags for cc_compute_report. CC_REQUEST_MILNOR yields both the Milnor
 * measure and the Milnor class. */
enum {
  CC_REQUEST_SEGRE = 1u << 0,
  CC_REQUEST_SM_SEGRE = 1u << 1,
  CC_REQUEST_CSM = 1u << 2,
  CC_REQUEST_FULTON = 1u << 3,
  CC_REQUEST_MILNOR = 1u << 4,
  CC_REQUEST_EULER = 1u << 5,
  CC_REQUEST_ALL = 0x3Fu
};

typedef enum cc_union_mode {
  CC_UNION_PRODUCT = 0,     /* unions via products of ideals (default) */
  CC_UNION_INTERSECTION = 1 /* unions via intersections of ideals */
} cc_union_mode;

typedef enum cc_notation {
  CC_NOTATION_HYPERPLANE = 0, /* "2H - 3H^2" */
  CC_NOTATION_CYCLES = 1      /* "2[P^1] - 3[P^0]" */
} cc_notation;

typedef struct cc_context cc_context;
typedef struct cc_ideal cc_ideal;
typedef struct cc_class cc_class;
typedef struct cc_report cc_report;

CHARCLASS_API const char* cc_version(void);
CHARCLASS_API const char* cc_status_string(cc_status status);
CHARCLASS_API void cc_string_free(char* s);

/* Context: Monte-Carlo parameters, union mode, result cache, last error.
 * Defaults: prime 32003, seed 0, trials 3, retries 5. */
CHARCLASS_API cc_status cc_context_create(cc_context** out);
CHARCLASS_API void cc_context_destroy(cc_context* ctx);
CHARCLASS_API const char* cc_context_last_error(const cc_context* ctx);
CHARCLASS_API cc_status cc_context_set_prime(cc_context* ctx, uint32_t prime);
CHARCLASS_API cc_status cc_context_set_seed(cc_context* ctx, uint64_t seed);
CHARCLASS_API cc_status cc_context_set_trials(cc_context* ctx, int trials);
CHARCLASS_API cc_status cc_context_set_retries(cc_context* ctx, int retries);
CHARCLASS_API cc_status cc_context_set_pair_budget(cc_context* ctx, size_t max_pairs);
CHARCLASS_API cc_status cc_context_set_union_mode(cc_context* ctx, cc_union_mode mode);

/* Ideals, in the text format
 *   vars: x, y, z
 *   ideal: x*y, x^2
 */
CHARCLASS_API cc_status cc_ideal_parse(cc_context* ctx, const char* text, cc_ideal** out);
CHARCLASS_API cc_status cc_ideal_read_file(cc_context* ctx, const char* path, cc_ideal** out);
CHARCLASS_API void cc_ideal_destroy(cc_ideal* ideal);
CHARCLASS_API size_t cc_ideal_ambient_dim(const cc_ideal* ideal);
CHARCLASS_API size_t cc_ideal_num_generators(const cc_ideal* ideal);
CHARCLASS_API int cc_ideal_max_degree(const cc_ideal* ideal);
CHARCLASS_API cc_status cc_ideal_to_string(const cc_ideal* ideal, char** out);
CHARCLASS_API cc_status cc_ideal_product(cc_context* ctx, const cc_ideal* const* ideals,
                                         size_t count, cc_ideal** out);
CHARCLASS_API cc_status cc_ideal_intersect(cc_context* ctx, const cc_ideal* a, const cc_ideal* b,
                                           cc_ideal** out);
/* Ideal of the partial derivatives of a principal ideal's generator. */
CHARCLASS_API cc_status cc_ideal_singularity_subscheme(cc_context* ctx, const cc_ideal* principal,
                                                       cc_ideal** out);

/* Single classes. */
CHARCLASS_API cc_status cc_compute_class(cc_context* ctx, const cc_ideal* ideal,
                                         cc_class_kind kind, cc_class** out);
/* s° of the intersection of the given subschemes by inclusion-exclusion over
 * their unions (realized per the context's union mode). */
CHARCLASS_API cc_status cc_sm_segre_inclusion_exclusion(cc_context* ctx,
                                                        const cc_ideal* const* ideals,
                                                        size_t count, cc_class** out);

CHARCLASS_API void cc_class_destroy(cc_class* cls);
CHARCLASS_API size_t cc_class_ambient_dim(const cc_class* cls);
/* CC_ERR_OUT_OF_RANGE when codim > n or the value does not fit in 64 bits. */
CHARCLASS_API cc_status cc_class_coeff_i64(const cc_class* cls, size_t codim, int64_t* out);
CHARCLASS_API cc_status cc_class_coeff_string(const cc_class* cls, size_t codim, char** out);
CHARCLASS_API cc_status cc_class_to_string(const cc_class* cls, cc_notation notation, char** out);

/* Reports: several classes from shared intermediate results. */
CHARCLASS_API cc_status cc_compute_report(cc_context* ctx, const cc_ideal* ideal,
                                          unsigned request_flags, cc_report** out);
CHARCLASS_API void cc_report_destroy(cc_report* report);
/* CC_ERR_OUT_OF_RANGE when the class was not requested. */
CHARCLASS_API cc_status cc_report_get_class(const cc_report* report, cc_class_kind kind,
                                            cc_class** out);
CHARCLASS_API cc_status cc_report_euler(const cc_report* report, int64_t* out);
CHARCLASS_API cc_status cc_report_to_json(const cc_report* report, char** out);
CHARCLASS_API cc_status cc_report_to_text(const cc_report* report, char** out);

/* Process-wide count of SM-Segre two-route evaluations and mismatches. */
CHARCLASS_API void cc_cross_check_stats(uint64_t* performed, uint64_t* failed);

#ifdef __cplusplus
}
#endif

#endif /* CHARCLASS_H */
