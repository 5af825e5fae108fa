/* C interface to the invseq library. Generated by cbindgen; do not edit. */

#ifndef INVSEQ_H
#define INVSEQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by fallible functions.
typedef enum InvseqStatus {
  InvseqStatus_Ok = 0,
  // Domain failure: input outside a bijection's class, no preimage,
  // a non-symmetric polynomial, a failed check.
  InvseqStatus_Domain = 1,
  // Usage failure: unparsable input, unknown name, wrong universe.
  InvseqStatus_Usage = 2,
  // Enumeration beyond the configured ceiling (`INVSEQ_MAX_N`).
  InvseqStatus_Limit = 3,
  // A required pointer argument was null.
  InvseqStatus_NullArg = 4,
  // An internal panic was caught at the boundary.
  InvseqStatus_Panic = 5,
} InvseqStatus;

// Opaque class-description handle.
typedef struct InvseqClass InvseqClass;

// Opaque permutation handle.
typedef struct InvseqPerm InvseqPerm;

// Opaque inversion-sequence handle.
typedef struct InvseqSeq InvseqSeq;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer is
// valid until the next failing call on the same thread. Never null.
const char *invseq_last_error(void);

// Builds an inversion sequence from `len` values; rejects words violating
// the positional bound.
//
// # Safety
// `values` must point to `len` readable `uint64_t`s; `out` must be writable.
enum InvseqStatus invseq_seq_new(const uint64_t *values, size_t len, struct InvseqSeq **out);

// # Safety
// `handle` must come from `invseq_seq_new` (or another constructor) and not
// have been freed; null is a no-op.
void invseq_seq_free(struct InvseqSeq *handle);

// # Safety
// `handle` must be a live sequence handle.
size_t invseq_seq_len(const struct InvseqSeq *handle);

// Copies the entries into `buf`, which must hold at least `len` values
// (query the length with `invseq_seq_len`).
//
// # Safety
// `handle` live; `buf` writable for `len` entries.
enum InvseqStatus invseq_seq_values(const struct InvseqSeq *handle, uint64_t *buf, size_t len);

// Builds a permutation of `1..=len` from its one-line notation.
//
// # Safety
// As for [`invseq_seq_new`].
enum InvseqStatus invseq_perm_new(const uint64_t *values, size_t len, struct InvseqPerm **out);

// # Safety
// `handle` must be live or null.
void invseq_perm_free(struct InvseqPerm *handle);

// # Safety
// `handle` must be a live permutation handle.
size_t invseq_perm_len(const struct InvseqPerm *handle);

// # Safety
// As for [`invseq_seq_values`].
enum InvseqStatus invseq_perm_values(const struct InvseqPerm *handle, uint64_t *buf, size_t len);

// Parses a registry name (`A`, `B`, `C`, `AB`, `BC`, `CA`, `ABC`, `T`) or a
// class description: `(>,-,>)`, `201,210,110`, `perm:2134,2143`.
//
// # Safety
// `text` nul-terminated; `out` writable.
enum InvseqStatus invseq_class_parse(const char *text, struct InvseqClass **out);

// # Safety
// `handle` must be live or null.
void invseq_class_free(struct InvseqClass *handle);

// Number of class members of length `n`.
//
// # Safety
// `class` live; `out` writable.
enum InvseqStatus invseq_count(const struct InvseqClass *class_, size_t n, uint64_t *out);

// Applies a sequence-to-sequence bijection: one of `alpha`, `beta`, `psi`,
// `psi-inv`, `gamma`, `gamma-inv`, `big-gamma`.
//
// # Safety
// `bijection` nul-terminated; `input` live; `out` writable.
enum InvseqStatus invseq_map_seq(const char *bijection,
                                 const struct InvseqSeq *input,
                                 struct InvseqSeq **out);

// Encodes a permutation: `code` is `lehmer` or `bcode`.
//
// # Safety
// `code` nul-terminated; `input` live; `out` writable.
enum InvseqStatus invseq_encode_perm(const char *code,
                                     const struct InvseqPerm *input,
                                     struct InvseqSeq **out);

// Decodes a sequence back to a permutation: `code` is `lehmer` or `bcode`.
//
// # Safety
// As for [`invseq_encode_perm`].
enum InvseqStatus invseq_decode_to_perm(const char *code,
                                        const struct InvseqSeq *input,
                                        struct InvseqPerm **out);

// Full statistics of a sequence as a JSON object (1-based positions; the
// fixed/to-right/to-left fields appear only on the moving domain).
// Returns null on error; free the string with [`invseq_string_free`].
//
// # Safety
// `input` must be a live sequence handle.
char *invseq_profile_json(const struct InvseqSeq *input);

// Move-by-move trace of the involution on the moving domain followed by the
// rewrite image, as JSON. Returns null (with `invseq_last_error` set) when
// the input is outside the domain.
//
// # Safety
// `input` must be a live sequence handle.
char *invseq_trace_json(const struct InvseqSeq *input);

// Gamma-vector of the class distribution polynomial as JSON. `via` is
// `poly` or `orbits` (the latter needs a permutation class).
//
// # Safety
// `class` live; `via` nul-terminated; `out` writable.
enum InvseqStatus invseq_gamma_json(const struct InvseqClass *class_,
                                    size_t n,
                                    const char *via,
                                    char **out);

// Runs one registered check (or all of them when `name` is null) up to
// `max_n` (0 means the per-check default). `all_pass` reports the aggregate
// verdict; the JSON report lands in `out`.
//
// # Safety
// `name` nul-terminated or null; `all_pass` and `out` writable.
enum InvseqStatus invseq_verify_json(const char *name, size_t max_n, int32_t *all_pass, char **out);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed; null is a no-op.
void invseq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INVSEQ_H */
