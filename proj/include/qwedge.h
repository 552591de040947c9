/*
 * qwedge C API: wedge-product entanglement measures for pure multipartite
 * states, behind opaque handles and status codes.
 *
 * Conventions:
 *  - Every function that can fail returns qw_status; QW_OK is 0.
 *  - On failure, qw_last_error() returns a thread-local message describing
 *    the most recent error in the calling thread.
 *  - Handles are created by qw_*_new/from/... functions and released with
 *    the matching qw_*_free; strings returned through char** are released
 *    with qw_string_free.
 *  - Subsystem (mode) indices are 1-based, matching the library; raw array
 *    positions (amplitude offsets, contribution slots) are 0-based.
 */

#ifndef QWEDGE_H
#define QWEDGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qw_status {
    QW_OK = 0,
    QW_ERR_ARGUMENT = 1,   /* bad index, arity, name, or matrix */
    QW_ERR_DIMENSION = 2,  /* amplitude count vs dims mismatch */
    QW_ERR_DEGENERATE = 3, /* zero vector where a state is required */
    QW_ERR_PARSE = 4,      /* malformed input document or file */
    QW_ERR_INTERNAL = 5
} qw_status;

typedef enum qw_norm_mode {
    QW_NORM_PAPER = 0,
    QW_NORM_UNIT_MAX = 1
} qw_norm_mode;

typedef struct qw_state qw_state;
typedef struct qw_report qw_report;

/* Thread-local message for the most recent failure in this thread. Never
 * NULL; empty string when no error has occurred. */
const char* qw_last_error(void);

void qw_string_free(char* s);

/* ------------------------------------------------------------------ */
/* States                                                              */

/* Parses {"dims": [...], "amplitudes": [[re,im], ...]}. */
qw_status qw_state_from_json(const char* text, qw_state** out);

/* Reads and parses a state file. */
qw_status qw_state_from_file(const char* path, qw_state** out);

/* "bell", "ghz:M", "w:M", "maxent:D", "product:N1xN2x...". */
qw_status qw_state_named(const char* name, qw_state** out);

/* Haar-random state, deterministic per seed. */
qw_status qw_state_random(const size_t* dims, size_t subsystem_count,
                          uint64_t seed, qw_state** out);

void qw_state_free(qw_state* state);

size_t qw_state_subsystem_count(const qw_state* state);
size_t qw_state_total_dimension(const qw_state* state);

/* Copies the dims into dims_out (capacity entries); fails if too small. */
qw_status qw_state_dims(const qw_state* state, size_t* dims_out, size_t capacity);

double qw_state_norm(const qw_state* state);

/* Amplitude at a 0-based flat row-major offset. */
qw_status qw_state_amplitude(const qw_state* state, size_t flat_offset,
                             double* re, double* im);

qw_status qw_state_to_json(const qw_state* state, char** out);

/* ------------------------------------------------------------------ */
/* Measures                                                            */

/* Computes the dispatched measure plus the density-matrix cross-check.
 * norm_tolerance <= 0 selects the default (1e-9). */
qw_status qw_measure(const qw_state* state, qw_norm_mode mode,
                     double norm_tolerance, qw_report** out);

void qw_report_free(qw_report* report);

double qw_report_value(const qw_report* report);
double qw_report_oracle_value(const qw_report* report);
double qw_report_discrepancy(const qw_report* report);
int qw_report_renormalized(const qw_report* report);

/* "bipartite", "multiqubit" or "multipartite"; owned by the report. */
const char* qw_report_path(const qw_report* report);

/* Two-qubit concurrence; < 0 when dims are not [2,2]. */
double qw_report_two_qubit_concurrence(const qw_report* report);

size_t qw_report_mode_count(const qw_report* report);
qw_status qw_report_mode_contribution(const qw_report* report, size_t slot,
                                      double* out);

qw_status qw_report_to_json(const qw_report* report, char** out);
qw_status qw_report_to_table(const qw_report* report, char** out);

/* Direct two-qubit concurrence of a dims-[2,2] state. */
qw_status qw_two_qubit_concurrence(const qw_state* state, double* out);

/* ------------------------------------------------------------------ */
/* Suites                                                              */

/* Runs the randomized invariant suites. all_passed is set to 1/0; the
 * rendered summary (JSON if as_json, else a table) goes to out. */
qw_status qw_selftest(uint64_t seed, int trials, double tolerance,
                      int as_json, int* all_passed, char** out);

/* Random local-filtering experiment; reports the E(after)/E(before)
 * distribution without asserting anything. */
qw_status qw_monotone_experiment(const size_t* dims, size_t subsystem_count,
                                 uint64_t seed, int trials, int unitary_only,
                                 qw_norm_mode mode, int as_json, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QWEDGE_H */
