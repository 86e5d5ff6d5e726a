#ifndef POLYRANK_H
#define POLYRANK_H

/*
 * C interface to the polynomial-matrix factorization library.
 *
 * All results are JSON documents returned as heap strings; release them with
 * prx_string_free.  Matrices travel as opaque handles created from the
 * standard matrix document {"m", "n", "grade", "entries"}.  Every function
 * returns a status code; on failure the thread-local prx_last_error() holds
 * a human-readable message and output parameters are left untouched.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PRX_BUILDING_SHARED)
#define PRX_API __attribute__((visibility("default")))
#else
#define PRX_API
#endif

typedef enum prx_status {
    PRX_OK = 0,
    PRX_ERR_INPUT = 1,     /* malformed documents, bad parameters, violated preconditions */
    PRX_ERR_EXHAUSTED = 2, /* a rejection sampler ran out of attempts */
    PRX_ERR_INTERNAL = 3   /* broken internal invariant: always a bug */
} prx_status;

typedef enum prx_verdict {
    PRX_DEFINITELY_IN = 0,
    PRX_DEFINITELY_NOT = 1,
    PRX_UNKNOWN = 2
} prx_verdict;

typedef struct prx_matrix prx_matrix;

/* Message from the most recent failing call on this thread; never NULL. */
PRX_API const char* prx_last_error(void);

PRX_API void prx_string_free(char* s);

PRX_API prx_status prx_matrix_parse(const char* text, prx_matrix** out);
PRX_API void prx_matrix_free(prx_matrix* m);
PRX_API prx_status prx_matrix_emit(const prx_matrix* m, char** out_text);
PRX_API prx_status prx_matrix_dims(const prx_matrix* m, int* out_rows, int* out_cols,
                                   int* out_grade);

/* Smith decomposition report: rank, invariant polynomials, U, S, V. */
PRX_API prx_status prx_smith(const prx_matrix* p, char** out_report);

/* space: "left-null", "right-null", "row", or "col". */
PRX_API prx_status prx_minimal_basis(const prx_matrix* p, const char* space, char** out_report);

/* kind: "smith", "lcer", "lcr", or "lrr". */
PRX_API prx_status prx_factor(const prx_matrix* p, const char* kind, char** out_report);

PRX_API prx_status prx_eigenstructure(const prx_matrix* p, char** out_report);

PRX_API prx_status prx_classify(const prx_matrix* p, int rank, char** out_report);

PRX_API prx_status prx_distance_sq(const prx_matrix* a, const prx_matrix* b, char** out_report);

/* e may be NULL for two-factor candidates.  out_product_ok receives 1/0. */
PRX_API prx_status prx_verify(const prx_matrix* p, const prx_matrix* l, const prx_matrix* e,
                              const prx_matrix* r, int* out_product_ok, char** out_report);

/*
 * family: "s", "a", "a_a", "a_rho", "b", "c", "m", "mh", or "orbk".
 * a: pointer to the index sum, NULL when the family does not take one.
 * rho/rho_len: the prescribed row degrees for "a_rho", NULL/0 otherwise.
 * witness_json: optional factorization document {"l": ..., "r": ...}.
 */
PRX_API prx_status prx_member(const prx_matrix* p, const char* family, int r, const int* a,
                              const int* rho, int rho_len, const char* witness_json,
                              prx_verdict* out_verdict, char** out_report);

/* family: "b" or "mh". */
PRX_API prx_status prx_sample(const char* family, int m, int n, int d, int r, int a,
                              unsigned long long seed, int bound, int max_attempts,
                              char** out_report);

/*
 * op: "pad" (needs grade >= 1), "redistribute" (needs j, k), or "homogenize".
 * grade/j/k are nullable pointers; epsilon is a rational string "p/q".
 */
PRX_API prx_status prx_perturb(const char* op, const char* witness_json, const char* epsilon,
                               const int* grade, const int* j, const int* k, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* POLYRANK_H */
