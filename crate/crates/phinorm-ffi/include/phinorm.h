#ifndef PHINORM_H
#define PHINORM_H

/* This file is generated by cbindgen from crates/phinorm-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every FFI call.
 */
typedef enum PnStatus {
  /**
   * Success.
   */
  PN_STATUS_OK = 0,
  /**
   * Malformed input: bad word syntax, out-of-range index, inverse
   * letters where a positive word is required, or a domain violation.
   */
  PN_STATUS_INVALID_INPUT = 2,
  /**
   * An internal invariant was breached; this is a library bug.
   */
  PN_STATUS_INTERNAL = 3,
  /**
   * An exhaustive computation refused to run beyond its bound.
   */
  PN_STATUS_BOUND_EXCEEDED = 4,
} PnStatus;

/**
 * Comparison verdict of [`pn_compare`].
 */
typedef enum PnOrdering {
  PN_ORDERING_LESS = -1,
  PN_ORDERING_EQUAL = 0,
  PN_ORDERING_GREATER = 1,
} PnOrdering;

/**
 * Sign verdict of [`pn_sign`].
 */
typedef enum PnSign {
  PN_SIGN_NEGATIVE = -1,
  PN_SIGN_ZERO = 0,
  PN_SIGN_POSITIVE = 1,
} PnSign;

/**
 * An opaque braid word (possibly with inverse letters).
 */
typedef struct PnWord PnWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a word. `strands = 0` means "infer from the letters".
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be a valid pointer.
 */
enum PnStatus pn_word_parse(const char *text, uint16_t strands, struct PnWord **out);

/**
 * Releases a word handle. NULL is accepted.
 *
 * # Safety
 * `w` must come from this library and not be freed twice.
 */
void pn_word_free(struct PnWord *w);

/**
 * Releases a string returned by this library. NULL is accepted.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void pn_string_free(char *s);

/**
 * The strand count of a parsed word.
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_word_strands(const struct PnWord *w, uint16_t *out);

/**
 * Formats a word back into the wire format.
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_word_format(const struct PnWord *w, char **out);

/**
 * The normal form of a positive word, as a new word handle.
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_normalize(const struct PnWord *w, struct PnWord **out);

/**
 * Compares two positive words in the braid ordering.
 *
 * # Safety
 * All pointers must be valid.
 */
enum PnStatus pn_compare(const struct PnWord *x, const struct PnWord *y, enum PnOrdering *out);

/**
 * The sign of a signed word relative to the identity braid.
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_sign(const struct PnWord *w, enum PnSign *out);

/**
 * The splitting of a positive word, rendered as entries separated by " ; ".
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_split(const struct PnWord *w, char **out);

/**
 * The breadth of a positive word's splitting.
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_breadth(const struct PnWord *w, uint64_t *out);

/**
 * The ordinal rank of a 3-strand positive word, as text like `w^3*2 + 4`.
 *
 * # Safety
 * `w` and `out` must be valid pointers.
 */
enum PnStatus pn_rank_b3(const struct PnWord *w, char **out);

/**
 * Library version as a static string; do not free.
 */
const char *pn_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PHINORM_H */
