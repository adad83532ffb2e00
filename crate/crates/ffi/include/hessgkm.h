#ifndef HESSGKM_H
#define HESSGKM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  HG_STATUS_NULL_POINTER = 1,
  HG_STATUS_INVALID_UTF8 = 2,
  HG_STATUS_INVALID_INPUT = 3,
  HG_STATUS_PRECONDITION = 4,
  HG_STATUS_TOO_LARGE = 5,
  HG_STATUS_BUFFER_TOO_SMALL = 6,
  HG_STATUS_INTERNAL = 7,
  HG_STATUS_PANIC = 8,
} HgStatus;

/**
 * Three-valued verdict.
 */
typedef enum HgVerdict {
  HG_VERDICT_NO = 0,
  HG_VERDICT_YES = 1,
  HG_VERDICT_UNKNOWN = 2,
} HgVerdict;

/**
 * A GKM graph.
 */
typedef struct HgGraph HgGraph;

/**
 * A Hessenberg function.
 */
typedef struct HgHessenberg HgHessenberg;

/**
 * A permutation in one-line notation.
 */
typedef struct HgPermutation HgPermutation;

/**
 * Classification of one pair (h, w).
 */
typedef struct HgReport HgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Valid until the next call on the same thread.
 */
const char *hg_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hg_string_free(char *s);

/**
 * Parses "3,3,4,4" (parentheses optional).
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum HgStatus hg_hessenberg_parse(const char *text, struct HgHessenberg **out);

/**
 * # Safety
 * `h` must be NULL or a live handle.
 */
void hg_hessenberg_free(struct HgHessenberg *h);

/**
 * n for a Hessenberg function, 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t hg_hessenberg_n(const struct HgHessenberg *h);

/**
 * Parses one-line notation such as "3214".
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum HgStatus hg_permutation_parse(const char *text, struct HgPermutation **out);

/**
 * # Safety
 * `w` must be NULL or a live handle.
 */
void hg_permutation_free(struct HgPermutation *w);

/**
 * Coxeter length, 0 for NULL.
 *
 * # Safety
 * `w` must be NULL or a live handle.
 */
size_t hg_permutation_length(const struct HgPermutation *w);

/**
 * # Safety
 * Handles must be live and `out` writable.
 */
enum HgStatus hg_is_admissible(const struct HgHessenberg *h,
                               const struct HgPermutation *w,
                               bool *out);

/**
 * Dimension of the cell of w in Hess(s, h).
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum HgStatus hg_cell_dimension(const struct HgHessenberg *h,
                                const struct HgPermutation *w,
                                size_t *out);

/**
 * Newline-terminated list of h-admissible permutations in lexicographic order.
 *
 * # Safety
 * `h` must be live and `out` writable. Free the result with `hg_string_free`.
 */
enum HgStatus hg_enumerate_admissible(const struct HgHessenberg *h, char **out);

/**
 * Betti numbers b_0, b_2, ... of Hess(s, h). `len` receives the count;
 * if it exceeds `cap`, nothing is written and BufferTooSmall is returned.
 *
 * # Safety
 * `buf` must have room for `cap` values (may be NULL when `cap` is 0).
 */
enum HgStatus hg_betti_numbers(const struct HgHessenberg *h,
                               uint64_t *buf,
                               size_t cap,
                               size_t *len);

/**
 * # Safety
 * Handles must be live and `out` writable.
 */
enum HgStatus hg_classify(const struct HgHessenberg *h,
                          const struct HgPermutation *w,
                          struct HgReport **out);

/**
 * # Safety
 * `r` must be NULL or a live handle.
 */
void hg_report_free(struct HgReport *r);

/**
 * # Safety
 * `r` must be live and `out` writable.
 */
enum HgStatus hg_report_json(const struct HgReport *r, char **out);

/**
 * Unknown for NULL.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
enum HgVerdict hg_report_intersection_smooth(const struct HgReport *r);

/**
 * Unknown for NULL.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
enum HgVerdict hg_report_intersection_irreducible(const struct HgReport *r);

/**
 * Unknown for NULL.
 *
 * # Safety
 * `r` must be NULL or a live handle.
 */
enum HgVerdict hg_report_hess_schubert_smooth(const struct HgReport *r);

/**
 * GKM graph of Hess(s, h) when `w` is NULL, else of its intersection with Ω_w.
 *
 * # Safety
 * `h` must be live, `w` NULL or live, `out` writable.
 */
enum HgStatus hg_graph_build(const struct HgHessenberg *h,
                             const struct HgPermutation *w,
                             struct HgGraph **out);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
void hg_graph_free(struct HgGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t hg_graph_vertex_count(const struct HgGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t hg_graph_edge_count(const struct HgGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
bool hg_graph_is_connected(const struct HgGraph *g);

/**
 * # Safety
 * `g` must be live and `out` writable.
 */
enum HgStatus hg_graph_dot(const struct HgGraph *g, char **out);

/**
 * # Safety
 * `g` must be live and `out` writable.
 */
enum HgStatus hg_graph_json(const struct HgGraph *g, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HESSGKM_H */
