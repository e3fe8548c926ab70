/* C interface to the nsym library.
 *
 * Every call returns an nsym_status. On failure the message for the calling
 * thread is available from nsym_last_error() until the next failing call.
 * Strings handed out by the library are released with nsym_string_free;
 * expressions with nsym_expr_free; covering streams with nsym_thc_free.
 */
#ifndef NSYM_NSYM_H
#define NSYM_NSYM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NSYM_API __declspec(dllexport)
#else
#define NSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nsym_expr nsym_expr;
typedef struct nsym_covering_stream nsym_covering_stream;

typedef enum nsym_status {
  NSYM_OK = 0,
  NSYM_INVALID_ARGUMENT = 1,
  NSYM_BOUND = 2,
  NSYM_OVERFLOW = 3,
  NSYM_BASIS_MISMATCH = 4,
  NSYM_CLASS = 5,
  NSYM_PARSE = 6,
  NSYM_INTERNAL = 7
} nsym_status;

typedef enum nsym_basis {
  NSYM_BASIS_H = 0,
  NSYM_BASIS_R = 1,
  NSYM_BASIS_M = 2,
  NSYM_BASIS_DI = 3,
  NSYM_BASIS_H_SYM = 4
} nsym_basis;

/* TEXT doubles as ASCII art for diagrams. */
typedef enum nsym_format { NSYM_FORMAT_TEXT = 0, NSYM_FORMAT_JSON = 1, NSYM_FORMAT_LATEX = 2 } nsym_format;

typedef struct nsym_options {
  int max_k; /* row bound for enumerations, at most 12 */
  int jobs;  /* worker threads for the covering fold */
} nsym_options;

NSYM_API nsym_options nsym_options_default(void);
NSYM_API const char* nsym_last_error(void);
NSYM_API const char* nsym_status_name(nsym_status status);
NSYM_API void nsym_string_free(char* s);

/* Expansions. `options` may be NULL for the defaults. */
NSYM_API nsym_status nsym_immaculate(const int* mu, size_t k, const nsym_options* options, nsym_expr** out);
NSYM_API nsym_status nsym_skew_immaculate(const int* mu, size_t mu_len, const int* nu, size_t nu_len,
                                          const nsym_options* options, nsym_expr** out);
NSYM_API nsym_status nsym_monomial(const int* alpha, size_t k, const nsym_options* options, nsym_expr** out);
/* Direct ribbon expansion. Outside the proven class this fails with
 * NSYM_CLASS unless `force` is nonzero; *unproven (optional) reports whether
 * the class test failed. */
NSYM_API nsym_status nsym_immaculate_ribbon(const int* alpha, size_t k, int force, const nsym_options* options,
                                            nsym_expr** out, int* unproven);
NSYM_API nsym_status nsym_ribbon_product(const int* alpha, size_t alpha_len, const int* beta, size_t beta_len,
                                         nsym_expr** out);

/* Expressions. Parsing accepts NSYM_FORMAT_TEXT and NSYM_FORMAT_JSON. */
NSYM_API nsym_status nsym_expr_parse(const char* text, nsym_format format, nsym_expr** out);
NSYM_API nsym_status nsym_expr_from_term(nsym_basis basis, const int* index, size_t len, nsym_expr** out);
/* Supported: H <-> R, H -> H_SYM, and the identity. */
NSYM_API nsym_status nsym_expr_convert(const nsym_expr* e, nsym_basis to, nsym_expr** out);
NSYM_API nsym_status nsym_expr_format(const nsym_expr* e, nsym_format format, char** out);
NSYM_API nsym_basis nsym_expr_basis(const nsym_expr* e);
NSYM_API size_t nsym_expr_size(const nsym_expr* e);
/* Term i in lexicographic index order; *index stays valid while e lives. */
NSYM_API nsym_status nsym_expr_term(const nsym_expr* e, size_t i, int64_t* coeff, const int** index, size_t* len);
NSYM_API int nsym_expr_equal(const nsym_expr* a, const nsym_expr* b);
NSYM_API void nsym_expr_free(nsym_expr* e);

/* Straightening. mu_out and nu_out need room for max(mu_len, nu_len) ints. */
NSYM_API nsym_status nsym_straighten(const int* mu, size_t mu_len, const int* nu, size_t nu_len, int* sign,
                                     int* mu_out, int* nu_out, size_t* out_len);

/* Prefix decomposition of the immaculate function of mu into m leading H
 * factors times skew immaculates, formatted as text, JSON or LaTeX. */
NSYM_API nsym_status nsym_decompose(const int* mu, size_t k, int m, nsym_format format,
                                    const nsym_options* options, char** out);

/* Lazy enumeration of tunnel hook coverings of mu/nu (nu may be NULL). */
NSYM_API nsym_status nsym_thc_open(const int* mu, size_t mu_len, const int* nu, size_t nu_len,
                                   const nsym_options* options, nsym_covering_stream** out);
/* Writes the next covering (one text line or a JSON object) to *out, or sets
 * *done and leaves *out NULL once the stream is exhausted. */
NSYM_API nsym_status nsym_thc_next(nsym_covering_stream* s, nsym_format format, char** out, int* done);
NSYM_API void nsym_thc_free(nsym_covering_stream* s);

/* Diagram art for mu/nu. Overlay either a permutation (straight shapes only)
 * or explicit terminal cells given as row,col pairs; pass NULL/0 for none. */
NSYM_API nsym_status nsym_thc_render(const int* mu, size_t mu_len, const int* nu, size_t nu_len, const int* sigma,
                                     size_t sigma_len, const int* cells, size_t cell_count, nsym_format format,
                                     char** out);

/* Runs a verification suite; *report receives a JSON array of reports. */
NSYM_API nsym_status nsym_verify(const char* suite, int n, const nsym_options* options, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* NSYM_NSYM_H */
