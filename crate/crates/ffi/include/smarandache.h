/* Generated by cbindgen from the smarandache-ffi crate. Do not edit. */

#ifndef SMARANDACHE_H
#define SMARANDACHE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SmLedgerStatus {
  SM_LEDGER_STATUS_CONFIRMED = 0,
  SM_LEDGER_STATUS_MISMATCH = 1,
  SM_LEDGER_STATUS_UNDECIDED = 2,
} SmLedgerStatus;

typedef enum SmNoneReason {
  SM_NONE_REASON_NO_REASON = 0,
  SM_NONE_REASON_STABLE_NONZERO_RESIDUE = 1,
  SM_NONE_REASON_FOUR_DIVIDES_N_PRIMORIAL_SQUAREFREE = 2,
} SmNoneReason;

// Result code returned by every fallible entry point.
typedef enum SmStatus {
  SM_STATUS_OK = 0,
  // Argument outside the function's domain.
  SM_STATUS_DOMAIN = 1,
  // The exact result does not fit in 64 bits.
  SM_STATUS_OVERFLOW = 2,
  SM_STATUS_NOT_COPRIME = 3,
  SM_STATUS_UNKNOWN_TABLE = 4,
  SM_STATUS_UNKNOWN_FUNCTION = 5,
  SM_STATUS_UNSUPPORTED = 6,
  SM_STATUS_NOT_REGISTERED = 7,
  SM_STATUS_ITERATION_CAP = 8,
  SM_STATUS_NULL_POINTER = 9,
  SM_STATUS_INVALID_UTF8 = 10,
  // A Rust panic was caught at the boundary.
  SM_STATUS_PANIC = 11,
  SM_STATUS_INTERNAL = 12,
} SmStatus;

typedef enum SmValueKind {
  // A plain integer result.
  SM_VALUE_KIND_INT = 0,
  // A search found `value`.
  SM_VALUE_KIND_FOUND = 1,
  // A search exhausted its bound; `value` holds the bound.
  SM_VALUE_KIND_NOT_FOUND_WITHIN = 2,
  // No solution exists; `reason` says why.
  SM_VALUE_KIND_PROVABLY_NONE = 3,
} SmValueKind;

// Prime factorization, primes in increasing order.
typedef struct SmFactorization SmFactorization;

// Audit result for one or all tables.
typedef struct SmLedger SmLedger;

// Orbit of a functional iteration.
typedef struct SmTrace SmTrace;

// A list of unsigned 64-bit integers.
typedef struct SmU64List SmU64List;

// Result of evaluating a function that may run a bounded search.
typedef struct SmValue {
  enum SmValueKind kind;
  uint64_t value;
  enum SmNoneReason reason;
} SmValue;

// One audited table entry.
typedef struct SmLedgerEntry {
  uint64_t argument;
  // False when the table leaves the value unknown.
  bool expected_known;
  uint64_t expected;
  struct SmValue computed;
  enum SmLedgerStatus status;
} SmLedgerEntry;

// Extra arguments for `sm_eval`. `k` and `m` are ignored unless the named
// function needs them; 0 means "not given".
typedef struct SmEvalParams {
  uint64_t search_bound;
  uint64_t prime_bound;
  uint64_t threshold;
  bool has_threshold;
  uint32_t k;
  uint32_t m;
} SmEvalParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *sm_version(void);

// Message describing the most recent failure on the calling thread, or
// NULL after a successful call. The pointer stays valid until the next
// call into this library on the same thread.
const char *sm_last_error_message(void);

// Factorizes n >= 1 (1 has no factors).
enum SmStatus sm_factorize(uint64_t n, struct SmFactorization **out);

// Number of distinct prime factors; 0 for NULL.
size_t sm_factorization_len(const struct SmFactorization *f);

// The i-th prime and its exponent.
enum SmStatus sm_factorization_get(const struct SmFactorization *f,
                                   size_t i,
                                   uint64_t *prime,
                                   uint32_t *exponent);

// # Safety
// `f` must be NULL or a live handle from `sm_factorize`.
void sm_factorization_free(struct SmFactorization *f);

// Iterates `name` (only "d" is registered) from x until a fixed point.
enum SmStatus sm_iterate_first_kind(const char *name, uint64_t x, struct SmTrace **out);

// Iterates `name` (only "sigma" is registered) from x until it reaches b.
enum SmStatus sm_iterate_second_kind(const char *name,
                                     uint64_t x,
                                     uint64_t b,
                                     struct SmTrace **out);

// Iterates `name` (only "gd" is registered) from x until it drops to b.
enum SmStatus sm_iterate_third_kind(const char *name, uint64_t x, uint64_t b, struct SmTrace **out);

// Number of applications until the stopping rule held; 0 for NULL.
uint64_t sm_trace_count(const struct SmTrace *t);

// Length of the orbit (count + 1); 0 for NULL.
size_t sm_trace_len(const struct SmTrace *t);

// Orbit values, starting with x; valid until the handle is freed.
const uint64_t *sm_trace_orbit(const struct SmTrace *t);

// # Safety
// `t` must be NULL or a live handle from an `sm_iterate_*` call.
void sm_trace_free(struct SmTrace *t);

// Number of embedded tables.
size_t sm_table_count(void);

// Id of the i-th embedded table, or NULL when out of range. The string is
// static.
const char *sm_table_id(size_t i);

// Audits one embedded table with default search bounds.
enum SmStatus sm_verify_table(const char *id, struct SmLedger **out);

// Audits every embedded table with default search bounds.
enum SmStatus sm_verify_all(struct SmLedger **out);

// Number of entries; 0 for NULL.
size_t sm_ledger_len(const struct SmLedger *l);

// Copies the i-th entry into `out`.
enum SmStatus sm_ledger_entry(const struct SmLedger *l, size_t i, struct SmLedgerEntry *out);

// Table id of the i-th entry, or NULL when out of range; valid until the
// ledger is freed.
const char *sm_ledger_table_id(const struct SmLedger *l, size_t i);

// # Safety
// `l` must be NULL or a live handle from `sm_verify_table`/`sm_verify_all`.
void sm_ledger_free(struct SmLedger *l);

// Every n in 2..=limit with S(n) = S(n+1).
enum SmStatus sm_tutescu_scan(uint64_t limit, struct SmU64List **out);

// Every n in 2..=limit with S(n) + S(n+1) = S(n+2).
enum SmStatus sm_radu_scan(uint64_t limit, struct SmU64List **out);

// Number of elements; 0 for NULL.
size_t sm_u64_list_len(const struct SmU64List *l);

// Element storage; valid until the list is freed.
const uint64_t *sm_u64_list_data(const struct SmU64List *l);

// # Safety
// `l` must be NULL or a live handle from a scan function.
void sm_u64_list_free(struct SmU64List *l);

// Deterministic primality test; never fails.
bool sm_is_prime(uint64_t n);

// S(n): least m with n | m!. S(1) = 1; n = 0 is a domain error.
enum SmStatus sm_s(uint64_t n, uint64_t *out);

// S(n) by stepping m! mod n; slow, for cross-checking.
enum SmStatus sm_s_oracle(uint64_t n, uint64_t *out);

// Least m with n | m!!.
enum SmStatus sm_sdf(uint64_t n, uint64_t *out);

// Least m with n | m(m + 1)/2.
enum SmStatus sm_z(uint64_t n, uint64_t *out);

// Number of divisors.
enum SmStatus sm_num_divisors(uint64_t n, uint64_t *out);

// Sum of divisors.
enum SmStatus sm_sum_divisors(uint64_t n, uint64_t *out);

// Greatest divisor below n (n >= 2).
enum SmStatus sm_greatest_proper_divisor(uint64_t n, uint64_t *out);

// Largest prime <= n.
enum SmStatus sm_inferior_prime_part(uint64_t n, uint64_t *out);

// Smallest prime >= n.
enum SmStatus sm_superior_prime_part(uint64_t n, uint64_t *out);

// Largest square <= n.
enum SmStatus sm_inferior_square_part(uint64_t n, uint64_t *out);

// Smallest square >= n.
enum SmStatus sm_superior_square_part(uint64_t n, uint64_t *out);

// Largest cube <= n.
enum SmStatus sm_inferior_cubic_part(uint64_t n, uint64_t *out);

// Smallest cube >= n.
enum SmStatus sm_superior_cubic_part(uint64_t n, uint64_t *out);

// Least k with n * k a perfect square.
enum SmStatus sm_square_complementary(uint64_t n, uint64_t *out);

// Least k with n * k a perfect cube.
enum SmStatus sm_cubic_complementary(uint64_t n, uint64_t *out);

// Least k >= 0 with n + k prime.
enum SmStatus sm_prime_complementary(uint64_t n, uint64_t *out);

// pi(x) through the S-based closed formula (x >= 4).
enum SmStatus sm_prime_count_via_s(uint64_t n, uint64_t *out);

// pi(x) by sieving.
enum SmStatus sm_sieve_prime_count(uint64_t n, uint64_t *out);

// Least m with n | m^k.
enum SmStatus sm_ceil_s(uint64_t n, uint32_t k, uint64_t *out);

// Least k with x * k a perfect m-th power.
enum SmStatus sm_m_power_complementary(uint64_t x, uint32_t m, uint64_t *out);

// Least m <= bound with p | 0! + 1! + ... + (m-1)! (p prime).
enum SmStatus sm_sk(uint64_t p, uint64_t bound, struct SmValue *out);

// Least m <= bound with p | 1! + 2! + ... + m! (p prime).
enum SmStatus sm_sw(uint64_t p, uint64_t bound, struct SmValue *out);

// Least prime p <= prime_bound with n | p# - 1, p# or p# + 1.
enum SmStatus sm_sntp(uint64_t n, uint64_t prime_bound, struct SmValue *out);

// Defaults: search bound 100000, prime bound 997, no threshold, no k or m.
struct SmEvalParams sm_eval_params_default(void);

// Evaluates a function by symbolic name (e.g. "S", "SK", "Sk", "sq-comp").
// `params` may be NULL for the defaults.
enum SmStatus sm_eval(const char *name,
                      uint64_t x,
                      const struct SmEvalParams *params,
                      struct SmValue *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SMARANDACHE_H */
