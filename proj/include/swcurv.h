#ifndef SWCURV_H
#define SWCURV_H

/* C interface to the swcurv library: curvature of left-invariant
 * pseudo-Riemannian metrics on low-dimensional Lie groups, Segre
 * classification of the Ricci operator, and polynomial constraint systems,
 * all over exact Q(sqrt(d)) arithmetic.
 *
 * Every object is an opaque handle freed by the matching _free function.
 * Functions return SWCURV_OK on success; on failure the handle outputs are
 * untouched and swcurv_last_error() describes the problem (thread-local).
 * Strings returned through char** are heap-allocated; release them with
 * swcurv_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SWCURV_OK = 0,
  SWCURV_ERROR = 1,             /* internal/unclassified failure */
  SWCURV_PARSE_ERROR = 2,       /* malformed input document or value */
  SWCURV_JACOBI_ERROR = 3,      /* structure constants violate Jacobi */
  SWCURV_DEGENERATE_METRIC = 4, /* metric not symmetric/invertible */
  SWCURV_BAD_PARAM = 5,         /* bad parameter (e.g. family a = 0) */
  SWCURV_UNSUPPORTED_TYPE = 6,  /* Segre type without canonical pair */
  SWCURV_BUDGET_EXHAUSTED = 7,  /* Groebner reduction budget hit */
  SWCURV_INDETERMINATE = 8      /* eigenvalue clustering ambiguous */
} swcurv_status;

typedef struct swcurv_doc swcurv_doc;
typedef struct swcurv_analysis swcurv_analysis;

const char* swcurv_last_error(void);
void swcurv_string_free(char* s);

/* Input documents (line format: dim, field_sqrt, metric, C i j k = value). */
swcurv_status swcurv_doc_parse(const char* text, swcurv_doc** out);
swcurv_status swcurv_doc_render(const swcurv_doc* doc, char** out);
void swcurv_doc_free(swcurv_doc* doc);

/* Full curvature + classification run. */
swcurv_status swcurv_analyze(const swcurv_doc* doc, double tolerance,
                             swcurv_analysis** out);
/* The one-parameter solution family; a is a value string such as "1/2".
 * delta, eps2, eps3 must be +1 or -1; paper_literal_metric selects the
 * diag(1, eps2, eps3, eps3) metric variant instead of the default
 * diag(1, eps2, eps3, -eps3). */
swcurv_status swcurv_family_analyze(const char* a, int delta, int eps2, int eps3,
                                    int paper_literal_metric, double tolerance,
                                    swcurv_analysis** out);

/* as_json != 0 renders the stable machine format, else human text. */
swcurv_status swcurv_analysis_render(const swcurv_analysis* an, int as_json, char** out);
swcurv_status swcurv_analysis_segre(const swcurv_analysis* an, char** out);
/* name: "einstein", "conformally_flat", "ricci_parallel", "sw_zero".
 * Returns 1/0, or -1 for an unknown name. */
int swcurv_analysis_predicate(const swcurv_analysis* an, const char* name);
/* 1 iff both SW = -(n-3) div W and the Eq.-(1) equivalence held. */
int swcurv_analysis_identities_ok(const swcurv_analysis* an);
void swcurv_analysis_free(swcurv_analysis* an);

/* Constraint-system dump for a Segre type string such as "{(11)(11)}" or
 * "{1111~}". eps is a length-4 array of +-1 signs, or NULL for all +1. */
swcurv_status swcurv_gen_system(const char* segre, const int* eps, char** out);

/* Reduce/solve the constraint system of a Segre type: linear elimination on
 * the SW block (strategy 0, "linear-then-gb") or Groebner basis directly
 * (strategy 1, "gb-only"), with inequality assumptions saturated. budget
 * bounds the number of reduction steps. out gets a text summary. */
swcurv_status swcurv_solve_system(const char* segre, const int* eps, int strategy,
                                  long budget, char** out);

/* Identity check over an input document: *pass set to 1 iff both identities
 * hold; summary gets a short text report. */
swcurv_status swcurv_check_identities(const swcurv_doc* doc, double tolerance,
                                      int* pass, char** summary);

#ifdef __cplusplus
}
#endif

#endif
