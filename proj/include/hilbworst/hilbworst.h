#ifndef HILBWORST_H
#define HILBWORST_H

#include <stddef.h>
#include <stdint.h>

#if defined(HILBWORST_BUILDING_LIBRARY)
#define HW_API __attribute__((visibility("default")))
#else
#define HW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every call returning hw_status leaves a message in hw_last_error() on failure. */
typedef enum {
    HW_OK = 0,
    HW_ERR_NULL_ARGUMENT = -1,
    HW_ERR_INVALID_ARGUMENT = -2,
    HW_ERR_INDEX_OUT_OF_RANGE = -3,
    HW_ERR_UNIVERSE_MISMATCH = -4,
    HW_ERR_UNSUPPORTED_DEGREE = -5,
    HW_ERR_MALFORMED_TABLE = -6,
    HW_ERR_BASIS_CRITERION = -7,
    HW_ERR_PARSE = -8,
    HW_ERR_CERTIFICATE_NOT_FOUND = -9,
    HW_ERR_INTERNAL = -99
} hw_status;

typedef enum {
    HW_FORMAT_JSON = 0,
    HW_FORMAT_TEXT = 1,
    HW_FORMAT_CAS = 2
} hw_format;

typedef struct hw_ideal hw_ideal;
typedef struct hw_report hw_report;

HW_API const char* hw_version(void);

/* Message of the last failed call on this thread ("" if none). Owned by the library. */
HW_API const char* hw_last_error(void);

/* Releases any string returned through a char** out-parameter. NULL is ignored. */
HW_API void hw_string_free(char* s);

/* Generators of J. flavor: "hilbert" | "miniversal" | "based_algebra" (NULL means hilbert);
 * presentation: "main" | "alternate" (NULL means main; alternate is hilbert only). */
HW_API hw_status hw_ideal_create(int n, const char* flavor, const char* presentation, hw_ideal** out);
HW_API void hw_ideal_free(hw_ideal* ideal);
HW_API hw_status hw_ideal_count(const hw_ideal* ideal, size_t* out);
HW_API hw_status hw_ideal_generator(const hw_ideal* ideal, size_t index, hw_format format, char** out);
HW_API hw_status hw_ideal_render(const hw_ideal* ideal, hw_format format, char** out);

/* Membership of a t-polynomial of degree <= 3 (canonical or CAS spelling).
 * certificate may be NULL; otherwise it receives a JSON list of [generator index, multiplier]. */
HW_API hw_status hw_ideal_contains(const hw_ideal* ideal, const char* poly, int* is_member, char** certificate);

/* Universal family over J (flavor hilbert or miniversal). */
HW_API hw_status hw_family_render(int n, const char* flavor, hw_format format, char** out);

/* Ideal and family together, for pasting into another system. */
HW_API hw_status hw_export_render(int n, const char* flavor, hw_format format, char** out);

/* routes: "all" or a comma separated subset of "classical,dgla,based,oracle". */
HW_API hw_status hw_verify(int n, const char* flavor, const char* routes, uint64_t seed, size_t samples,
                           hw_report** out);
HW_API void hw_report_free(hw_report* report);
HW_API hw_status hw_report_passed(const hw_report* report, int* passed);
HW_API hw_status hw_report_render(const hw_report* report, hw_format format, char** out);
/* "route/check: generator" of the first failing record, "" when all passed. */
HW_API hw_status hw_report_first_failure(const hw_report* report, char** out);
/* One JSON object per oracle sample, newline separated ("" without the oracle route). */
HW_API hw_status hw_report_sample_lines(const hw_report* report, char** out);

/* Maximal linear subspaces L_{A,B} for n; list_cap bounds the enumerated optimal (A,B). */
HW_API hw_status hw_subspaces_render(int n, size_t list_cap, hw_format format, char** out);

/* tvals_json: {"n": n, "t": [[i,j,k,"p/q"], ...]}. Renders the table of the family at that
 * point with its associativity residuals. */
HW_API hw_status hw_table_render(const char* tvals_json, hw_format format, int* associative, char** out);

#ifdef __cplusplus
}
#endif

#endif
