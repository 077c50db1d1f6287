/* C interface to the prymsv library. All strings returned through char**
 * out-parameters are owned by the caller and released with prymsv_string_free.
 * Handles are released with their matching *_free function.
 */
#ifndef PRYMSV_H
#define PRYMSV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PRYMSV_BUILDING)
#define PRYMSV_API __attribute__((visibility("default")))
#else
#define PRYMSV_API
#endif

typedef enum prymsv_status {
  PRYMSV_OK = 0,
  PRYMSV_ERR_INVALID_ARGUMENT = 1,
  PRYMSV_ERR_MISMATCHED_FIELD,
  PRYMSV_ERR_INVALID_DISCRIMINANT,
  PRYMSV_ERR_UNSUPPORTED_RESIDUE,
  PRYMSV_ERR_SQUARE_DISCRIMINANT,
  PRYMSV_ERR_RESIDUE_MISMATCH,
  PRYMSV_ERR_NOT_DIVISIBLE_BY_4,
  PRYMSV_ERR_OUTSIDE_HYPOTHESES,
  PRYMSV_ERR_MISSING_TABLE_ENTRY,
  PRYMSV_ERR_PARSE,
  PRYMSV_ERR_B_REQUIRED,
  PRYMSV_ERR_INVALID_PROTOTYPE,
  PRYMSV_ERR_SLIT_TOO_LONG,
  PRYMSV_ERR_DEGENERATE_DIRECTION,
  PRYMSV_ERR_AMBIGUOUS_GROUPING,
  PRYMSV_ERR_IO,
  PRYMSV_ERR_INTERNAL
} prymsv_status;

typedef enum prymsv_stratum {
  PRYMSV_W4 = 0,
  PRYMSV_W2 = 1,
  PRYMSV_W03 = 2
} prymsv_stratum;

typedef struct prymsv_table prymsv_table;
typedef struct prymsv_surface prymsv_surface;

PRYMSV_API const char* prymsv_version(void);
PRYMSV_API const char* prymsv_status_name(prymsv_status status);

/* Message of the most recent failure on the calling thread. */
PRYMSV_API const char* prymsv_last_error(void);

PRYMSV_API void prymsv_string_free(char* s);

/* Euler characteristic tables */
PRYMSV_API prymsv_status prymsv_table_builtin(prymsv_table** out);
/* Rows of the file override the built-in ones; overrides are reported on stderr. */
PRYMSV_API prymsv_status prymsv_table_load(const char* path, prymsv_table** out);
PRYMSV_API void prymsv_table_free(prymsv_table* table);
PRYMSV_API prymsv_status prymsv_table_lookup(const prymsv_table* table, long long D,
                                             prymsv_stratum stratum, char** out);

/* Exact quantities, rendered as "p/q" */
PRYMSV_API prymsv_status prymsv_chi_w03(long long D, char** out);
PRYMSV_API prymsv_status prymsv_m_D(long long D, long long e, long long* out);
PRYMSV_API prymsv_status prymsv_b_D(long long D, int* out);

/* Reports. *ok / *all_match is set to 1 when every check passes. */
PRYMSV_API prymsv_status prymsv_chi_report_csv(const prymsv_table* table, long long dmin,
                                               long long dmax, char** out, int* all_match);
/* One JSON object per component; as_array selects a JSON array over JSON lines. */
PRYMSV_API prymsv_status prymsv_sv_json(const prymsv_table* table, long long D, int as_array,
                                        char** out);
/* counts receives holds, fails, skipped. */
PRYMSV_API prymsv_status prymsv_conjecture_csv(const prymsv_table* table, long long dmax,
                                               char** out, long long counts[3]);
PRYMSV_API prymsv_status prymsv_verify_modular_json(long long nmax, char** out, int* ok);
PRYMSV_API prymsv_status prymsv_verify_identity_json(long long dmax, char** out, int* ok);
PRYMSV_API prymsv_status prymsv_verify_eigen_csv(long long dmax, char** out, int* ok);
/* kind is "cyl", "triple" or "split" */
PRYMSV_API prymsv_status prymsv_protos_csv(long long D, const char* kind, char** out);

/* Slit-tori surfaces. slit may be NULL for the default direction. */
PRYMSV_API prymsv_status prymsv_surface_new(long long D, long long a, long long b, long long d,
                                            long long e, const double* slit,
                                            prymsv_surface** out);
PRYMSV_API void prymsv_surface_free(prymsv_surface* surface);
PRYMSV_API prymsv_status prymsv_surface_area(const prymsv_surface* surface, double* out);
PRYMSV_API prymsv_status prymsv_surface_num_triangles(const prymsv_surface* surface, int* out);
/* tol < 0 selects the default 1e-9 * R. */
PRYMSV_API prymsv_status prymsv_surface_count_json(const prymsv_surface* surface, double R,
                                                   double tol, char** out);

#ifdef __cplusplus
}
#endif

#endif
