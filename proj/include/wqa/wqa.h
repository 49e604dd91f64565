#ifndef WQA_H
#define WQA_H

#include <stddef.h>

#if defined(_WIN32)
#define WQA_API __declspec(dllexport)
#else
#define WQA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 1..13 mirror the library's error kinds. */
typedef enum wqa_status {
    WQA_OK = 0,
    WQA_SYNTAX_ERROR = 1,
    WQA_UNKNOWN_SYMBOL = 2,
    WQA_UNSUPPORTED_WORD = 3,
    WQA_DIVISOR_VANISHES = 4,
    WQA_DENOMINATOR_VANISHES = 5,
    WQA_DIVISION_BY_ZERO = 6,
    WQA_INDEX_OUT_OF_RANGE = 7,
    WQA_ALPHA_NOT_INVERTIBLE = 8,
    WQA_INVALID_ORDER = 9,
    WQA_SINGULAR = 10,
    WQA_UNSUPPORTED_FORMAT = 11,
    WQA_INVALID_ARGUMENT = 12,
    WQA_MODE_MISMATCH = 13,
    WQA_NULL_ARGUMENT = 100,
    WQA_INTERNAL_ERROR = 101
} wqa_status;

typedef struct wqa_context wqa_context;
typedef struct wqa_quotient wqa_quotient;

WQA_API const char* wqa_version(void);
WQA_API const char* wqa_status_name(int status);
/* Message of the last failed call on this thread ("" if none). */
WQA_API const char* wqa_last_error(void);

/* Strings returned through char** out parameters are owned by the caller. */
WQA_API void wqa_string_free(char* s);

/* cyclotomic_d = 0 selects generic q (rational functions); otherwise the
   field Q[q]/Phi_d with d odd and > 1. v_flavor != 0 selects the sandwiched
   algebra. */
WQA_API int wqa_context_create(int cyclotomic_d, int v_flavor, wqa_context** out);
WQA_API void wqa_context_destroy(wqa_context* ctx);

WQA_API int wqa_normalize(const wqa_context* ctx, const char* expr, char** out);
WQA_API int wqa_coproduct(const wqa_context* ctx, const char* expr, char** out);
WQA_API int wqa_counit(const wqa_context* ctx, const char* expr, char** out);
WQA_API int wqa_antipode(const wqa_context* ctx, const char* expr, char** out);
/* *result = 1 iff K^i Kb^j is group-like. */
WQA_API int wqa_grouplike_check(const wqa_context* ctx, long i, long j, int* result);
/* Group-like basis monomials of degree <= bound, comma separated. */
WQA_API int wqa_grouplike_set(const wqa_context* ctx, long bound, char** out);

WQA_API size_t wqa_suite_count(void);
WQA_API const char* wqa_suite_name(size_t index);
WQA_API const char* wqa_suite_summary(size_t index);
/* Runs a named suite. *passed is 1 iff every non-informational item passed.
   json != 0 writes the report as JSON, otherwise as text. For the rmatrix
   suite the quotient order is the context's d, or 3 in generic mode. */
WQA_API int wqa_run_suite(const wqa_context* ctx, const char* name, long degree_bound, int json, int* passed, char** out);

/* Root-of-unity quotient of order d (odd, > 1). */
WQA_API int wqa_quotient_create(int d, wqa_quotient** out);
WQA_API void wqa_quotient_destroy(wqa_quotient* q);
WQA_API int wqa_quotient_dim(const wqa_quotient* q, size_t* dim);
/* format: "json" or "text". with_rhat != 0 appends the inverse. */
WQA_API int wqa_rmatrix_export(wqa_quotient* q, const char* format, int with_rhat, char** out);
/* checks: comma separated subset of qybe, regular, intertwine,
   quasitriangular, rho; NULL or "" for all. timing = 0 writes elapsed_ms as 0. */
WQA_API int wqa_rmatrix_verify(wqa_quotient* q, const char* checks, const char* format, int timing, int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif
