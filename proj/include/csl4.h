#ifndef CSL4_H
#define CSL4_H

/* C interface to the csl4 library. All handles are opaque; every function
 * that can fail returns a csl4_status and leaves a message for
 * csl4_last_error() (per thread). Strings returned through char** are owned
 * by the caller and released with csl4_string_free(). Big integers cross the
 * boundary as decimal strings. */

#include <stddef.h>

#if defined(_WIN32)
#define CSL4_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CSL4_API __attribute__((visibility("default")))
#else
#define CSL4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csl4_status {
  CSL4_OK = 0,
  CSL4_E_ARGUMENT = 1, /* null pointer, bad enum value, n out of range */
  CSL4_E_PARSE = 2,    /* malformed quaternion or module text */
  CSL4_E_DOMAIN = 3,   /* mathematically invalid input, e.g. not admissible */
  CSL4_E_BUDGET = 4,   /* enumeration ceiling exceeded */
  CSL4_E_INTERNAL = 5
} csl4_status;

typedef enum csl4_family { CSL4_D4STAR = 0, CSL4_Z4 = 1, CSL4_A4 = 2, CSL4_ICOSIAN = 3 } csl4_family;

typedef enum csl4_kind { CSL4_ROT = 0, CSL4_CSL = 1 } csl4_kind;

typedef struct csl4_param csl4_param;
typedef struct csl4_module csl4_module;
typedef struct csl4_report csl4_report;
typedef struct csl4_table csl4_table;

typedef struct csl4_budget {
  long max_n;
  long max_icosian_n;
  size_t max_elements;
} csl4_budget;

typedef struct csl4_verify_row {
  const char* check;
  const char* family;
  long n;
  const char* expected;
  const char* actual;
  int passed;
} csl4_verify_row;

CSL4_API const char* csl4_version(void);
CSL4_API const char* csl4_last_error(void);
CSL4_API const char* csl4_status_name(csl4_status status);
CSL4_API void csl4_string_free(char* s);

CSL4_API csl4_status csl4_family_from_name(const char* name, csl4_family* out);
CSL4_API const char* csl4_family_name(csl4_family family);
CSL4_API csl4_status csl4_point_group_order(csl4_family family, size_t* out);

/* Rotation parameters. `p` is ignored for CSL4_A4 and may be NULL there. */
CSL4_API csl4_status csl4_param_parse(csl4_family family, const char* q, const char* p, csl4_param** out);
CSL4_API void csl4_param_free(csl4_param* param);
CSL4_API csl4_status csl4_param_describe(const csl4_param* param, char** out);
CSL4_API csl4_status csl4_param_primitivized(const csl4_param* param, int* out);
CSL4_API csl4_status csl4_param_admissible(const csl4_param* param, int* out);

CSL4_API csl4_status csl4_sigma(const csl4_param* param, char** out);
/* Rotation matrix as JSON: 4x4 array of strings over Q(sqrt5). */
CSL4_API csl4_status csl4_rotation_matrix_json(const csl4_param* param, char** out);
CSL4_API csl4_status csl4_csl_closed(const csl4_param* param, csl4_module** out);
CSL4_API csl4_status csl4_csl_brute(const csl4_param* param, csl4_module** out);

/* Modules. */
CSL4_API csl4_status csl4_family_module(csl4_family family, csl4_module** out);
CSL4_API void csl4_module_free(csl4_module* module);
CSL4_API csl4_status csl4_module_to_json(const csl4_module* module, char** out);
CSL4_API csl4_status csl4_module_from_json(const char* text, csl4_module** out);
CSL4_API csl4_status csl4_module_rank(const csl4_module* module, size_t* rank, size_t* ambient_dim);
CSL4_API csl4_status csl4_module_equal(const csl4_module* a, const csl4_module* b, int* out);
CSL4_API csl4_status csl4_module_index_in(const csl4_module* sub, const csl4_module* sup, char** out);

/* Counting functions. */
CSL4_API csl4_status csl4_count(csl4_family family, csl4_kind kind, long n, char** out);
CSL4_API csl4_status csl4_series_coefficient(csl4_family family, csl4_kind kind, long N, long n, char** out);
CSL4_API csl4_status csl4_rotation_count(csl4_family family, long n, char** out);
CSL4_API csl4_status csl4_isometry_count(csl4_family family, long n, char** out);
CSL4_API csl4_status csl4_spectrum_member(csl4_family family, long n, int* out);

/* Enumeration. A NULL budget means the defaults. */
CSL4_API void csl4_budget_default(csl4_budget* out);
CSL4_API csl4_status csl4_count_classes(csl4_family family, long n, const csl4_budget* budget, csl4_report** out);
CSL4_API void csl4_report_free(csl4_report* report);
CSL4_API csl4_status csl4_report_counts(const csl4_report* report, size_t* rotation_classes, size_t* distinct_csls,
                                        double* seconds);
/* Class i: its parameter and the index of the witness sharing its CSL. */
CSL4_API csl4_status csl4_report_class(const csl4_report* report, size_t i, csl4_param** param, size_t* csl_index);

/* Verification tables. Row strings stay valid until the table is freed. */
CSL4_API csl4_status csl4_verify_family(csl4_family family, long max_n, const csl4_budget* budget,
                                        csl4_table** out);
CSL4_API csl4_status csl4_verify_acceptance(const csl4_budget* budget, csl4_table** out);
CSL4_API csl4_status csl4_table_size(const csl4_table* table, size_t* out);
CSL4_API csl4_status csl4_table_row(const csl4_table* table, size_t i, csl4_verify_row* out);
CSL4_API void csl4_table_free(csl4_table* table);

#ifdef __cplusplus
}
#endif

#endif /* CSL4_H */
