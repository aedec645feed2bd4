/* C interface to the length-lab permutation-group invariants library. */

#ifndef LENGTH_LAB_H
#define LENGTH_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of a fallible call.
 */
typedef enum LlStatus {
  LL_STATUS_OK = 0,
  LL_STATUS_NULL_POINTER = 1,
  LL_STATUS_INVALID_ARGUMENT = 2,
  LL_STATUS_CAPACITY = 3,
  LL_STATUS_DOMAIN = 4,
  LL_STATUS_INTERNAL = 5,
  LL_STATUS_UTF8 = 6,
} LlStatus;

/**
 * Opaque handle to a finite permutation group.
 */
typedef struct LlGroup LlGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Most recent error message of this thread, or null if none. The caller
 * owns the returned string and must release it with `ll_string_free`.
 */
char *ll_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must have been returned by this library and not yet freed.
 */
void ll_string_free(char *s);

/**
 * Releases a group handle.
 *
 * # Safety
 * `g` must have been returned by a constructor of this library and not yet
 * freed.
 */
void ll_group_free(struct LlGroup *g);

/**
 * Builds a group from generators in cycle notation (0-based points, e.g.
 * `"(0 1 2)(3 4)"`), all acting on `degree` points.
 *
 * # Safety
 * `gens` must point to `len` valid C strings; `out` must be valid for a
 * write.
 */
enum LlStatus ll_group_from_cycles(uintptr_t degree,
                                   const char *const *gens,
                                   uintptr_t len,
                                   struct LlGroup **out);

/**
 * Cyclic group of order `n`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum LlStatus ll_group_cyclic(uint64_t n, struct LlGroup **out);

/**
 * Symmetric group on `n` points.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum LlStatus ll_group_symmetric(uint64_t n, struct LlGroup **out);

/**
 * Alternating group on `n >= 3` points.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum LlStatus ll_group_alternating(uint64_t n, struct LlGroup **out);

/**
 * Dihedral group of order `n` (even, at least 6).
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum LlStatus ll_group_dihedral(uint64_t n, struct LlGroup **out);

/**
 * `PSL(2, q)` on the projective line, for a supported prime power `q`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum LlStatus ll_group_psl2(uint64_t q, struct LlGroup **out);

/**
 * `AGL(1, q)` on the affine line, for a supported prime power `q`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum LlStatus ll_group_agl1(uint64_t q, struct LlGroup **out);

/**
 * Direct product acting on the disjoint union of the point sets.
 *
 * # Safety
 * `a` and `b` must be valid group handles; `out` must be valid for a write.
 */
enum LlStatus ll_group_direct_product(const struct LlGroup *a,
                                      const struct LlGroup *b,
                                      struct LlGroup **out);

/**
 * Wreath product `S wr T` in its imprimitive action.
 *
 * # Safety
 * `s` and `t` must be valid group handles; `out` must be valid for a write.
 */
enum LlStatus ll_group_wreath_product(const struct LlGroup *s,
                                      const struct LlGroup *t,
                                      struct LlGroup **out);

/**
 * Number of points the group acts on; 0 for a null handle.
 *
 * # Safety
 * `g` must be a valid group handle or null.
 */
uintptr_t ll_group_degree(const struct LlGroup *g);

/**
 * Group order as a decimal string (orders exceed any machine word for
 * large wreath products).
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_order_decimal(const struct LlGroup *g, char **out);

/**
 * Membership test for a permutation in cycle notation; writes 1 or 0.
 *
 * # Safety
 * `g` must be a valid group handle, `cycles` a valid C string, `out` valid
 * for a write.
 */
enum LlStatus ll_group_contains_cycles(const struct LlGroup *g, const char *cycles, int32_t *out);

/**
 * Solubility (derived series reaches the trivial subgroup); writes 1 or 0.
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_is_soluble(const struct LlGroup *g, int32_t *out);

/**
 * Nilpotency (lower central series reaches the trivial subgroup); writes 1
 * or 0.
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_is_nilpotent(const struct LlGroup *g, int32_t *out);

/**
 * Nonsoluble length, computed within the given enumeration and quotient
 * limits (pass 0 to use the defaults of 200000 and 20000).
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_nonsoluble_length(const struct LlGroup *g,
                                         uintptr_t enumeration_limit,
                                         uintptr_t quotient_limit,
                                         uint64_t *out);

/**
 * Generalized Fitting height, within the given limits (0 for defaults).
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_fstar_height(const struct LlGroup *g,
                                    uintptr_t enumeration_limit,
                                    uintptr_t quotient_limit,
                                    uint64_t *out);

/**
 * Fitting height of a soluble group, within the given limits (0 for
 * defaults). Fails with a domain error on insoluble input.
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_fitting_height(const struct LlGroup *g,
                                      uintptr_t enumeration_limit,
                                      uintptr_t quotient_limit,
                                      uint64_t *out);

/**
 * Order of the soluble radical as a decimal string, within the limits
 * (0 for defaults).
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_soluble_radical_order(const struct LlGroup *g,
                                             uintptr_t enumeration_limit,
                                             uintptr_t quotient_limit,
                                             char **out);

/**
 * Order of the generalized Fitting subgroup as a decimal string, within
 * the limits (0 for defaults).
 *
 * # Safety
 * `g` must be a valid group handle; `out` must be valid for a write.
 */
enum LlStatus ll_group_fstar_order(const struct LlGroup *g,
                                   uintptr_t enumeration_limit,
                                   uintptr_t quotient_limit,
                                   char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LENGTH_LAB_H */
