/* fatpoints: positivity of divisor classes on blow-ups of projective space
 * at general points, with a finite-field interpolation oracle.
 *
 * C interface to the shared library. Handles are opaque; every function
 * returns an fp_status, and fp_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef FATPOINTS_H
#define FATPOINTS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_NEGATIVE = 1,     /* a check ran and the verdict is negative */
  FP_ERR_INVALID = 2,  /* malformed input or violated precondition */
  FP_ERR_RANGE = 3,    /* outside the proved theorem range */
  FP_ERR_INTERNAL = 4  /* a proved statement failed to hold: a bug */
} fp_status;

/* Verdicts of the global-generation checks. */
typedef enum fp_gg_status {
  FP_GG_GENERATED = 0,
  FP_GG_NOT_GENERATED = 1,
  FP_GG_OUT_OF_RANGE = 2
} fp_gg_status;

typedef struct fp_divisor fp_divisor;

const char* fp_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* fp_last_error(void);

/* A divisor class d*H - sum m_i E_i on P^n blown up at s points. */
fp_status fp_divisor_create(int n, long long d, const long long* mults, int s,
                            fp_divisor** out);
void fp_divisor_destroy(fp_divisor* divisor);

/* Containment multiplicity of the span of the points indexed by I
 * (1-based, strictly increasing). */
fp_status fp_linear_multiplicity(const fp_divisor* divisor, const int* I, int len,
                                 long long* out);

/* Containment multiplicity of the join J(L_I, sigma_t); t >= 1 requires
 * s = n + 3. I may be empty (len = 0). */
fp_status fp_join_multiplicity(const fp_divisor* divisor, const int* I, int len, int t,
                               long long* out);

/* Linear and secant virtual dimensions of the associated linear system. */
fp_status fp_ldim(const fp_divisor* divisor, long long* out);
fp_status fp_sldim(const fp_divisor* divisor, long long* out);

/* Global generation of the strict transform on the blow-up along base
 * cycles of dimension <= r. On FP_OK or FP_NEGATIVE, *verdict holds the
 * classification; a NotGloballyGenerated witness (an index set) is copied
 * into `witness` when provided. */
fp_status fp_gg_check(const fp_divisor* divisor, int r, fp_gg_status* verdict, int* witness,
                      int witness_cap, int* witness_len);

/* Base-point freeness of the full strict transform (r = n-1 with divisorial
 * subtraction). */
fp_status fp_bpf_check(const fp_divisor* divisor, fp_gg_status* verdict, int* witness,
                       int witness_cap, int* witness_len);

/* Exact h^0 of the system of degree-d hypersurfaces with the given point
 * multiplicities, by matrix rank over F_prime at a seeded random
 * configuration in general position. prime = 0 selects the default. */
fp_status fp_oracle_h0(int n, int d, const int* mults, int s, uint64_t seed, uint64_t prime,
                       long long* h0_out, long long* rank_out, long long* ncols_out);

/* Runs a JSON job description (the same schema the CLI emits under
 * "inputs", plus "command") and yields the JSON report. *report receives a
 * heap string to release with fp_string_free; *exit_code receives the
 * process exit code the CLI would use (0 ok, 1 negative verdict, 2 invalid,
 * 3 out of range, 4 internal). */
fp_status fp_run_job(const char* job_json, char** report, int* exit_code);

void fp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FATPOINTS_H */
