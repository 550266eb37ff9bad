/*
 * polwit - two-photon polarization entanglement toolkit, C API.
 *
 * All functions return POLWIT_OK on success; on failure they return the
 * status naming the violated invariant and leave a human-readable message
 * (with the measured residual where applicable) in polwit_last_error(),
 * which is thread local. Output parameters are untouched on failure.
 *
 * States are two-qubit polarization density matrices behind the opaque
 * polwit_state handle, laid out in the |HH>,|HV>,|VH>,|VV> basis with
 * arm A as the major index.
 */
#ifndef POLWIT_H
#define POLWIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define POLWIT_API __declspec(dllexport)
#else
#define POLWIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polwit_status {
  POLWIT_OK = 0,
  POLWIT_ERR_NULL_ARGUMENT = 1,
  POLWIT_ERR_INVALID_ARGUMENT = 2,
  POLWIT_ERR_PARSE = 3,         /* malformed state document */
  POLWIT_ERR_NOT_HERMITIAN = 4, /* Hermiticity residual above 1e-9 */
  POLWIT_ERR_TRACE = 5,         /* trace differs from 1 by more than 1e-9 */
  POLWIT_ERR_NOT_POSITIVE = 6,  /* eigenvalue below -1e-9 */
  POLWIT_ERR_BUFFER_TOO_SMALL = 7,
  POLWIT_ERR_INTERNAL = 8
} polwit_status;

typedef struct polwit_state polwit_state;

/* Entanglement verdicts of the exact detectors. `witnessed` is strict
 * negativity of the witness expectation; `ppt_entangled` requires the
 * partial-transpose minimum eigenvalue below -1e-10, so boundary states
 * count as separable. */
typedef struct polwit_verdict {
  double witness_value;
  double ppt_min_eigenvalue;
  double concurrence;
  int witnessed;
  int ppt_entangled;
} polwit_verdict;

/* Witness estimate from simulated coincidence counting: the plug-in value,
 * its multinomial standard error, the six estimated projector
 * probabilities, and the per-setting coincidence totals (linear, diagonal,
 * circular). */
typedef struct polwit_estimate {
  double value;
  double std_error;
  double p_hh, p_vv, p_dd, p_ff, p_lr, p_rl;
  uint64_t totals[3];
} polwit_estimate;

/* One row of the Werner sweep. */
typedef struct polwit_sweep_row {
  double p;
  double w_est;
  double w_err;
  double w_analytic;
  double ppt_min_eig;
  int entangled_ppt;
} polwit_sweep_row;

POLWIT_API const char* polwit_version(void);
POLWIT_API const char* polwit_status_name(polwit_status status);
POLWIT_API const char* polwit_last_error(void);

/* --- state constructors; free with polwit_state_free ------------------- */

/* p |psi-><psi-| + (1-p)/4 identity, p in [0,1]. */
POLWIT_API polwit_status polwit_state_werner(double p, polwit_state** out);

/* Patchwork source pipeline with a balanced sector split; equals the
 * analytic Werner state of the same singlet fraction. */
POLWIT_API polwit_status polwit_state_patchwork(double singlet_fraction,
                                                polwit_state** out);

/* Projector of (|HH> + e^{i phase}|VV>)/sqrt(2). */
POLWIT_API polwit_status polwit_state_bell(double phase, polwit_state** out);

/* Projector of the singlet (|HV> - |VH>)/sqrt(2). */
POLWIT_API polwit_status polwit_state_singlet(polwit_state** out);

/* Maximally mixed state. */
POLWIT_API polwit_status polwit_state_chaotic(polwit_state** out);

/* Builds a state from 4x4 row-major real and imaginary parts, validating
 * Hermiticity, trace and positivity. */
POLWIT_API polwit_status polwit_state_from_parts(const double re[16],
                                                 const double im[16],
                                                 polwit_state** out);

POLWIT_API void polwit_state_free(polwit_state* state);

/* Copies the 4x4 row-major real and imaginary parts of the state. */
POLWIT_API polwit_status polwit_state_parts(const polwit_state* state,
                                            double re[16], double im[16]);

/* --- state documents ---------------------------------------------------- */

/* Writes the text document (fields dim/re/im) into buf and the length,
 * excluding the terminating NUL, into *len. When buf is null or cap is too
 * small, returns POLWIT_ERR_BUFFER_TOO_SMALL with *len set to the required
 * capacity including the NUL. */
POLWIT_API polwit_status polwit_state_serialize(const polwit_state* state,
                                                char* buf, size_t cap,
                                                size_t* len);

POLWIT_API polwit_status polwit_state_parse(const char* text,
                                            polwit_state** out);

/* --- analysis ------------------------------------------------------------ */

/* Tr[W rho] for the three-setting entanglement witness. */
POLWIT_API polwit_status polwit_witness_value(const polwit_state* state,
                                              double* out);

/* Closed form (1-3p)/4 of the witness on the Werner family. */
POLWIT_API polwit_status polwit_witness_analytic_werner(double p, double* out);

/* Witness expectation, partial-transpose minimum eigenvalue, concurrence
 * and the boolean verdicts, in one pass. */
POLWIT_API polwit_status polwit_analyze(const polwit_state* state,
                                        polwit_verdict* out);

/* --- simulated measurement ---------------------------------------------- */

/* Simulates the three correlated settings at the given coincidence rate and
 * acquisition time and folds the counts into a witness estimate. Output is
 * a pure function of (state, rate, duration, seed): per-setting substreams
 * are derived with polwit_derive_seed. */
POLWIT_API polwit_status polwit_measure_witness(const polwit_state* state,
                                                double rate_cps,
                                                double duration_s,
                                                uint64_t seed,
                                                polwit_estimate* out);

/* One grid point of the Werner sweep; the sampling stream is
 * polwit_derive_seed(master_seed, point_index). With analytic_only nonzero,
 * w_est carries the closed-form line and w_err is zero. */
POLWIT_API polwit_status polwit_sweep_point(double p, double rate_cps,
                                            double duration_s,
                                            uint64_t master_seed,
                                            uint64_t point_index,
                                            int analytic_only,
                                            polwit_sweep_row* out);

/* Whole sweep as a CSV table with header
 * p,w_est,w_err,w_analytic,ppt_min_eig,entangled_ppt. Buffer contract as in
 * polwit_state_serialize. */
POLWIT_API polwit_status polwit_sweep_csv(const double* p_values, size_t n,
                                          double rate_cps, double duration_s,
                                          uint64_t seed, int analytic_only,
                                          char* buf, size_t cap, size_t* len);

/* Substream seed derivation, splitmix64(master + (ordinal+1)*golden). */
POLWIT_API uint64_t polwit_derive_seed(uint64_t master, uint64_t ordinal);

#ifdef __cplusplus
}
#endif

#endif /* POLWIT_H */
