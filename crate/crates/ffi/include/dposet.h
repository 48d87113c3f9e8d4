#ifndef DPOSET_H
#define DPOSET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. `DP_STATUS_OK` is zero.
 */
typedef enum DpStatus {
  DP_STATUS_OK = 0,
  DP_STATUS_NULL_POINTER = 1,
  DP_STATUS_INVALID_UTF8 = 2,
  DP_STATUS_PARSE = 3,
  DP_STATUS_CYCLE = 4,
  DP_STATUS_INDEX = 5,
  DP_STATUS_SIZE_CAP = 6,
  DP_STATUS_NOT_SPECIAL = 7,
  DP_STATUS_NOT_INCREASING = 8,
  DP_STATUS_INVALID_PARTITION = 9,
  DP_STATUS_INVALID_PERMUTATION = 10,
  DP_STATUS_INVALID_COMPOSITION = 11,
  DP_STATUS_NOT_A_PARTITION = 12,
  DP_STATUS_NOT_LATTICE = 13,
  DP_STATUS_LENGTH_MISMATCH = 14,
  DP_STATUS_SIZE_MISMATCH = 15,
  DP_STATUS_EMPTY = 16,
  DP_STATUS_PRECONDITION = 17,
  DP_STATUS_OVERFLOW = 18,
  DP_STATUS_UNKNOWN_SUITE = 19,
  DP_STATUS_PANIC = 20,
} DpStatus;

/**
 * Opaque handle to a validated double poset.
 */
typedef struct DpDoublePoset DpDoublePoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Symbolic name of a status, e.g. `"CycleError"`. Static storage.
 */
const char *dp_status_name(enum DpStatus status);

/**
 * Copy of the last error message on this thread, or null if the last call
 * succeeded. Release with [`dp_string_free`].
 */
char *dp_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void dp_string_free(char *s);

/**
 * # Safety
 * `d` must be null or a handle returned by this library, not yet freed.
 */
void dp_free(struct DpDoublePoset *d);

/**
 * Parses the text format (`dp <n>`, `r1: …`, `r2: …`).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum DpStatus dp_parse(const char *text, struct DpDoublePoset **out);

/**
 * The one-element double poset.
 *
 * # Safety
 * `out` must be writable.
 */
enum DpStatus dp_point(struct DpDoublePoset **out);

/**
 * `P_σ` for a permutation given in one-line notation, values `1..=len`.
 *
 * # Safety
 * `word` must point to `len` readable values (or be null when `len` is 0);
 * `out` must be writable.
 */
enum DpStatus dp_from_permutation(const uintptr_t *word, uintptr_t len, struct DpDoublePoset **out);

/**
 * `π_ν` for a partition given by its parts, largest first.
 *
 * # Safety
 * As for [`dp_from_permutation`].
 */
enum DpStatus dp_from_partition(const uintptr_t *parts, uintptr_t len, struct DpDoublePoset **out);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
uintptr_t dp_size(const struct DpDoublePoset *d);

/**
 * Composition `AB`: disjoint union, with every element of `A` below every
 * element of `B` in the second order.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum DpStatus dp_compose(const struct DpDoublePoset *a,
                         const struct DpDoublePoset *b,
                         struct DpDoublePoset **out);

/**
 * Whether the two double posets are isomorphic (1) or not (0).
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum DpStatus dp_is_isomorphic(const struct DpDoublePoset *a,
                               const struct DpDoublePoset *b,
                               int *out);

/**
 * Canonical key in hexadecimal.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_canonical_key(const struct DpDoublePoset *d, char **out);

/**
 * Canonical text form.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_serialize(const struct DpDoublePoset *d, char **out);

/**
 * Number of pictures from `a` to `b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum DpStatus dp_pairing(const struct DpDoublePoset *a,
                         const struct DpDoublePoset *b,
                         uint64_t *out);

/**
 * Coproduct as `c*left|right` terms over canonical keys.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_coproduct(const struct DpDoublePoset *d, char **out);

/**
 * Antipode as `c*key` terms.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_antipode(const struct DpDoublePoset *d, char **out);

/**
 * Internal product `a ∘ b` as `c*key` terms.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum DpStatus dp_internal_product(const struct DpDoublePoset *a,
                                  const struct DpDoublePoset *b,
                                  char **out);

/**
 * Generating function in the monomial basis, as `c*M(…)` terms.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_gamma(const struct DpDoublePoset *d, char **out);

/**
 * Linear extensions of a special double poset, one permutation per line.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_linear_extensions(const struct DpDoublePoset *d, char **out);

/**
 * Image under the linear extension map, as `c*σ` terms.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum DpStatus dp_lmap(const struct DpDoublePoset *d, char **out);

/**
 * The two lattice-word counts for a special double poset and a partition,
 * together with its pairing against `π_ν`.
 *
 * # Safety
 * `d` must be a live handle; `parts` must point to `len` readable values;
 * the three out-pointers must be writable.
 */
enum DpStatus dp_lr_counts(const struct DpDoublePoset *d,
                           const uintptr_t *parts,
                           uintptr_t len,
                           uint64_t *complement_count,
                           uint64_t *mirror_count,
                           uint64_t *pairing);

/**
 * Runs a verification suite; `passed` receives 1 iff every property held
 * and `report` the printed report.
 *
 * # Safety
 * `suite` must be a nul-terminated string; the out-pointers must be
 * writable.
 */
enum DpStatus dp_check(const char *suite,
                       uintptr_t max_n,
                       uint64_t seed,
                       int *passed,
                       char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DPOSET_H */
