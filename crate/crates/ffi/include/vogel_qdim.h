#ifndef VOGEL_QDIM_H
#define VOGEL_QDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum VqStatus {
  VQ_STATUS_OK = 0,
  /**
   * A null pointer or an unusable argument.
   */
  VQ_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A string argument did not parse.
   */
  VQ_STATUS_PARSE = 2,
  /**
   * Zero over zero at the point; use a line limit.
   */
  VQ_STATUS_INDETERMINATE = 3,
  VQ_STATUS_SINGULAR = 4,
  /**
   * The point is off the line, or the vanishing orders do not balance.
   */
  VQ_STATUS_LIMIT_FAILED = 5,
  /**
   * The product has no finite nonzero x -> 0 limit.
   */
  VQ_STATUS_UNBALANCED = 6,
  /**
   * A bug: the library panicked.
   */
  VQ_STATUS_INTERNAL = 7,
} VqStatus;

/**
 * Classification of a point for the universal formula.
 */
typedef enum VqClass {
  VQ_CLASS_ZERO = 0,
  VQ_CLASS_REGULAR = 1,
  VQ_CLASS_SINGULAR = 2,
  VQ_CLASS_INDETERMINATE = 3,
} VqClass;

/**
 * How the value at a table point compares with the tables.
 */
typedef enum VqVerdict {
  VQ_VERDICT_MATCH = 0,
  VQ_VERDICT_MISMATCH = 1,
  VQ_VERDICT_SKIPPED_BELOW_STABLE_RANK = 2,
  VQ_VERDICT_LIMIT_COUNT_MISMATCH = 3,
  /**
   * The tables say nothing about this case.
   */
  VQ_VERDICT_NOT_TABULATED = 4,
} VqVerdict;

/**
 * `coeff · Π sinh(x a) / Π sinh(x b)`, exact.
 */
typedef struct VqProduct VqProduct;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent error message on this thread. The pointer stays valid
 * until the next failing call on the same thread; never free it.
 */
const char *vq_last_error(void);

/**
 * Library version, static.
 */
const char *vq_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void vq_string_free(char *s);

/**
 * Releases a product. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void vq_product_free(struct VqProduct *p);

/**
 * The universal function at a table algebra (`"E8"`, `"B5"`, `"so8"`),
 * with arguments permuted by `perm` (`"bag"`; null for the identity).
 *
 * # Safety
 * String arguments must be null or nul-terminated; `out` must be writable.
 */
enum VqStatus vq_universal(const char *algebra,
                           uint32_t k,
                           uint32_t n,
                           const char *perm,
                           struct VqProduct **out);

/**
 * The universal function at a raw point whose coordinates are rationals
 * written `"p"` or `"p/q"`. `classification` receives the point's class,
 * also on `Indeterminate` and `Singular` failures; it may be null.
 *
 * # Safety
 * String arguments must be null or nul-terminated; `out` must be writable.
 */
enum VqStatus vq_universal_at(const char *alpha,
                              const char *beta,
                              const char *gamma,
                              uint32_t k,
                              uint32_t n,
                              const char *perm,
                              enum VqClass *classification,
                              struct VqProduct **out);

/**
 * The universal function at a table algebra approached along `line`
 * (`"sl"`, `"so"`, `"sp"`, `"exc"`; null for the algebra's own line).
 *
 * # Safety
 * String arguments must be null or nul-terminated; `out` must be writable.
 */
enum VqStatus vq_limit(const char *algebra,
                       uint32_t k,
                       uint32_t n,
                       const char *perm,
                       const char *line,
                       struct VqProduct **out);

/**
 * Weyl quantum dimension of the Cartan power `k·X2 + n·ad`. On the A series
 * with `k > 0` this is a sum of two conjugate representations, so the
 * result is `count` products written to `out[0..count]`; `capacity` is the
 * length of `out`, and 2 always suffices.
 *
 * # Safety
 * `algebra` must be nul-terminated; `out` must hold `capacity` pointers.
 */
enum VqStatus vq_qdim(const char *algebra,
                      uint32_t k,
                      uint32_t n,
                      struct VqProduct **out,
                      size_t capacity,
                      size_t *count);

/**
 * Compares the table entry for a case with the universal value. `line` as
 * in `vq_limit`, except that null evaluates directly where possible.
 *
 * # Safety
 * String arguments must be null or nul-terminated; `verdict` must be writable.
 */
enum VqStatus vq_verify_case(const char *algebra,
                             uint32_t k,
                             uint32_t n,
                             const char *perm,
                             const char *line,
                             enum VqVerdict *verdict);

/**
 * Canonical JSON, `{"coeff":"p/q","num":[...],"den":[...]}`. Free with
 * `vq_string_free`.
 *
 * # Safety
 * `p` must be a live product; `out` must be writable.
 */
enum VqStatus vq_product_to_json(const struct VqProduct *p, char **out);

/**
 * Parses canonical JSON back into a product.
 *
 * # Safety
 * `json` must be nul-terminated; `out` must be writable.
 */
enum VqStatus vq_product_from_json(const char *json, struct VqProduct **out);

/**
 * The ordinary dimension, the x -> 0 limit, as an exact rational string.
 *
 * # Safety
 * `p` must be a live product; `out` must be writable.
 */
enum VqStatus vq_product_dimension(const struct VqProduct *p, char **out);

/**
 * Floating-point value at `x`.
 *
 * # Safety
 * `p` must be a live product; `out` must be writable.
 */
enum VqStatus vq_product_eval(const struct VqProduct *p, double x, double *out);

/**
 * Exact equality of canonical forms. `equal` receives 1 or 0.
 *
 * # Safety
 * `a` and `b` must be live products; `equal` must be writable.
 */
enum VqStatus vq_product_equals(const struct VqProduct *a,
                                const struct VqProduct *b,
                                int32_t *equal);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VOGEL_QDIM_H */
