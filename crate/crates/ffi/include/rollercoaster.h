#ifndef ROLLERCOASTER_H
#define ROLLERCOASTER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Zero means success.
 */
typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_POINTER = 1,
  RC_STATUS_INVALID_UTF8 = 2,
  RC_STATUS_PARSE = 3,
  /**
   * Valid input the operation does not accept, e.g. a link closure.
   */
  RC_STATUS_UNSUPPORTED = 4,
  RC_STATUS_BUFFER_TOO_SMALL = 5,
  RC_STATUS_PANIC = 6,
} RcStatus;

/**
 * A braid word with a fixed strand count.
 */
typedef struct RcBraid RcBraid;

/**
 * A validated DT code.
 */
typedef struct RcDtCode RcDtCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *rc_last_error(void);

/**
 * Release a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void rc_string_free(char *s);

/**
 * Parse a DT code such as `"[4, 6, 2]"` or `"4 6 2"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum RcStatus rc_dt_parse(const char *text, struct RcDtCode **out);

/**
 * # Safety
 * `code` must come from this library and not have been freed. NULL is ignored.
 */
void rc_dt_free(struct RcDtCode *code);

/**
 * Number of crossings, or 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t rc_dt_crossings(const struct RcDtCode *code);

/**
 * Least warping degree over all basepoints and both directions, with the
 * basepoint attaining it.
 *
 * # Safety
 * `code` must be a live handle; the out pointers must be writable.
 */
enum RcStatus rc_dt_min_warp(const struct RcDtCode *code,
                             size_t *degree,
                             size_t *edge,
                             bool *backward);

/**
 * Warping degree at every edge `0..2c` in one direction. `len` is the
 * capacity of `out`; `written` receives `2c` even when the buffer is too
 * small.
 *
 * # Safety
 * `code` must be a live handle; `out` must hold `len` values; `written`
 * must be writable.
 */
enum RcStatus rc_dt_warp_profile(const struct RcDtCode *code,
                                 bool backward,
                                 size_t *out,
                                 size_t len,
                                 size_t *written);

/**
 * Whether the diagram has no nugatory crossing.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_dt_is_reduced(const struct RcDtCode *code, bool *out);

/**
 * Jones polynomial as text, e.g. `"t + t^3 - t^4"`. Release with
 * [`rc_string_free`].
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_dt_jones(const struct RcDtCode *code, char **out);

/**
 * DT code as text, e.g. `"[4, 6, 2]"`. Release with [`rc_string_free`].
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_dt_to_string(const struct RcDtCode *code, char **out);

/**
 * Parse a braid word such as `"1 2 -1"` or `"s1 s2^-1"`. `strands` fixes
 * the strand count; pass 0 to use one more than the largest generator.
 *
 * # Safety
 * `word` must be a NUL-terminated string; `out` must be writable.
 */
enum RcStatus rc_braid_parse(const char *word, size_t strands, struct RcBraid **out);

/**
 * # Safety
 * `braid` must come from this library and not have been freed. NULL is ignored.
 */
void rc_braid_free(struct RcBraid *braid);

/**
 * Crossings of a positive braid closure first met from above (`a`) and
 * from below (`b`), walking from the top-left strand.
 *
 * # Safety
 * `braid` must be a live handle; `a` and `b` must be writable.
 */
enum RcStatus rc_braid_ab_counts(const struct RcBraid *braid, size_t *a, size_t *b);

/**
 * Unknotting number `(C - n + 1) / 2` of a positive braid knot.
 *
 * # Safety
 * `braid` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_braid_unknotting(const struct RcBraid *braid, size_t *out);

/**
 * DT code of the braid closure, as a new handle.
 *
 * # Safety
 * `braid` must be a live handle; `out` must be writable.
 */
enum RcStatus rc_braid_closure_dt(const struct RcBraid *braid, struct RcDtCode **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROLLERCOASTER_H */
