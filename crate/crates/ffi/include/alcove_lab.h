#ifndef ALCOVE_LAB_H
#define ALCOVE_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AlStatus {
  AL_STATUS_OK = 0,
  AL_STATUS_NULL_POINTER = 1,
  AL_STATUS_INVALID_UTF8 = 2,
  AL_STATUS_INVALID_INPUT = 3,
  AL_STATUS_GUARD_EXCEEDED = 4,
  AL_STATUS_NOT_PERMISSIBLE = 5,
  AL_STATUS_OUT_OF_RANGE = 6,
  AL_STATUS_INTERNAL = 7,
  AL_STATUS_PANIC = 8,
} AlStatus;

/**
 * An Iwahori-Weyl group element together with its group.
 */
typedef struct AlElement AlElement;

/**
 * A group context such as `D:3`.
 */
typedef struct AlGroup AlGroup;

/**
 * A canonically ordered set of elements.
 */
typedef struct AlSet AlSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. Valid
 * until the next failing call on the same thread.
 */
const char *al_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void al_string_free(char *s);

/**
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum AlStatus al_group_new(const char *name, struct AlGroup **out);

/**
 * # Safety
 * `g` must be null or a handle from [`al_group_new`].
 */
void al_group_free(struct AlGroup *g);

/**
 * Rank of the group, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live group handle.
 */
size_t al_group_rank(const struct AlGroup *g);

/**
 * `t_ν σ` from a translation `t[0..n]` and a signed-permutation window
 * `s[0..n]`.
 *
 * # Safety
 * `t` and `s` must point to `n` values each; `out` must be writable.
 */
enum AlStatus al_element_new(const struct AlGroup *g,
                             const int64_t *t,
                             const int32_t *s,
                             size_t n,
                             struct AlElement **out);

/**
 * Parses `{"ctx":"D:3","t":[..],"s":[..]}`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AlStatus al_element_from_json(const char *text, struct AlElement **out);

/**
 * # Safety
 * `e` must be a live element handle; `out` must be writable.
 */
enum AlStatus al_element_to_json(const struct AlElement *e, char **out);

/**
 * # Safety
 * `e` must be null or an element handle from this library.
 */
void al_element_free(struct AlElement *e);

/**
 * # Safety
 * `e` must be a live element handle; `out` must be writable.
 */
enum AlStatus al_element_length(const struct AlElement *e, size_t *out);

/**
 * Product `x·y` of two elements of the same group.
 *
 * # Safety
 * `x`, `y` must be live element handles; `out` must be writable.
 */
enum AlStatus al_element_mul(const struct AlElement *x,
                             const struct AlElement *y,
                             struct AlElement **out);

/**
 * Bruhat order `x ≤ y`.
 *
 * # Safety
 * `x`, `y` must be live element handles; `out` must be writable.
 */
enum AlStatus al_bruhat_leq(const struct AlElement *x, const struct AlElement *y, bool *out);

/**
 * Whether `e` is μ-permissible, `μ = mu[0..n]`.
 *
 * # Safety
 * `mu` must point to `n` values; `e` must be live; `out` must be writable.
 */
enum AlStatus al_is_permissible(const struct AlElement *e, const int64_t *mu, size_t n, bool *out);

/**
 * `Adm(μ)` in canonical order. Length guards follow `ALCOVE_LAB_GUARD`.
 *
 * # Safety
 * `g` must be live; `mu` must point to `n` values; `out` must be writable.
 */
enum AlStatus al_admissible_set(const struct AlGroup *g,
                                const int64_t *mu,
                                size_t n,
                                struct AlSet **out);

/**
 * `Perm(μ)` in canonical order.
 *
 * # Safety
 * `g` must be live; `mu` must point to `n` values; `out` must be writable.
 */
enum AlStatus al_permissible_set(const struct AlGroup *g,
                                 const int64_t *mu,
                                 size_t n,
                                 struct AlSet **out);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live set handle.
 */
size_t al_set_len(const struct AlSet *s);

/**
 * A new handle for the `i`-th element.
 *
 * # Safety
 * `s` must be live; `out` must be writable.
 */
enum AlStatus al_set_get(const struct AlSet *s, size_t i, struct AlElement **out);

/**
 * # Safety
 * `s`, `e` must be live handles; `out` must be writable.
 */
enum AlStatus al_set_contains(const struct AlSet *s, const struct AlElement *e, bool *out);

/**
 * # Safety
 * `s` must be null or a set handle from this library.
 */
void al_set_free(struct AlSet *s);

/**
 * The reflection lift of a permissible element of type D to its
 * translation part, as a JSON document.
 *
 * # Safety
 * `e` must be live; `out` must be writable.
 */
enum AlStatus al_lift_chain_json(const struct AlElement *e, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALCOVE_LAB_H */
