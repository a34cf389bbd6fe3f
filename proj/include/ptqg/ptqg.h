// Copyright 2026 The ptqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ptqg library. All functions are thread-safe unless a
 * handle is shared between threads. Functions returning ptqg_status leave a
 * message for ptqg_last_error() on failure. Strings returned by the library
 * are owned by it: static strings live forever, strings tied to a handle live
 * until the handle is freed or the same accessor is called again. */
#ifndef PTQG_PTQG_H
#define PTQG_PTQG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PTQG_API __declspec(dllexport)
#else
#define PTQG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ptqg_status {
    PTQG_OK = 0,
    PTQG_ERR_INVALID_ARGUMENT = 2,
    PTQG_ERR_INFEASIBLE = 3,
    PTQG_ERR_RANGE = 4,
    PTQG_ERR_VERIFICATION = 5,
    PTQG_ERR_INTERNAL = 6,
} ptqg_status;

typedef enum ptqg_variant {
    PTQG_P1 = 0,
    PTQG_P2 = 1,
} ptqg_variant;

typedef enum ptqg_format {
    PTQG_CSV = 0,
    PTQG_JSON = 1,
} ptqg_format;

PTQG_API const char *ptqg_version(void);
/* Message of the last failed call on this thread, "" if none. */
PTQG_API const char *ptqg_last_error(void);
PTQG_API const char *ptqg_status_name(ptqg_status status);

/* ---- star model ---- */

PTQG_API ptqg_status ptqg_min_leaves(double p_s, double p_f_max, int *out_L);
PTQG_API ptqg_status ptqg_failure_probability(int L, double p_s, double *out);
/* Majority of one direct and two indirect Z estimates (0 = +1, 1 = -1). */
PTQG_API int ptqg_indirect_z_decode(int z0, int x1, int x2);

/* ---- renormalized error ---- */

#define PTQG_NUM_SOURCES 6

typedef struct ptqg_renorm {
    double p_r;
    /* ROOT_SELF, SUCCESS_ARMS, DISCARDED_LEAVES, GATE_ERRORS, PREP, MEAS */
    double breakdown[PTQG_NUM_SOURCES];
} ptqg_renorm;

PTQG_API const char *ptqg_source_name(int index);
PTQG_API ptqg_status ptqg_renorm_independent(ptqg_variant variant, double p_u, int L, ptqg_renorm *out);
PTQG_API ptqg_status ptqg_renorm_full(
    ptqg_variant variant, double p_u, double p_P, double p_M, int L, double memory, ptqg_renorm *out);
/* Smallest L at which P2 beats P1 to leading order. */
PTQG_API int ptqg_independent_crossover_L(void);

typedef struct ptqg_threshold_options {
    double p_r_target;
    double p_f_max;
    int add_failure;
    double memory;
    int gate_only;
} ptqg_threshold_options;

PTQG_API void ptqg_threshold_options_init(ptqg_threshold_options *opts);

typedef struct ptqg_threshold_point {
    double p_s;
    ptqg_variant variant;
    int L;
    double p_f;
    double p_u_threshold;
    int iterations;
} ptqg_threshold_point;

PTQG_API ptqg_status ptqg_threshold(
    double p_s, ptqg_variant variant, const ptqg_threshold_options *opts, ptqg_threshold_point *out);

/* ---- sampling ---- */

typedef struct ptqg_sampling_options {
    ptqg_variant variant;
    double p_s;
    int cherries;
    size_t samples;
    uint64_t seed;
    int workers;
    int depolarizing;
    int physical_accounting;
    int count_benign_as_flip;
    int depolarize_failed_cz;
} ptqg_sampling_options;

PTQG_API void ptqg_sampling_options_init(ptqg_sampling_options *opts);

typedef struct ptqg_coefficient_point {
    int L;
    double gate;
    double gate_stderr;
    double prep;
    double meas;
    double discarded_single_first_order;
    double discarded_gate_first_order;
    double discarded_second_order;
    double failed_draw_fraction;
} ptqg_coefficient_point;

PTQG_API ptqg_status ptqg_sample_coefficients(const ptqg_sampling_options *opts, int L, ptqg_coefficient_point *out);

typedef struct ptqg_linear_fit {
    double a;
    double b;
    double r_squared;
} ptqg_linear_fit;

PTQG_API ptqg_status ptqg_fit_line(const double *x, const double *y, size_t n, ptqg_linear_fit *out);

typedef struct ptqg_correlations {
    double independent;
    double nearest;
    double second_nearest;
    double higher_order;
    double ratio;
} ptqg_correlations;

PTQG_API ptqg_status ptqg_classify_correlations(
    const ptqg_sampling_options *opts, int L, double p_u, double p_P, double p_M, ptqg_correlations *out);

typedef struct ptqg_mc_check {
    size_t samples;
    double empirical;
    double reference;
    double stderr_;
    double z;
} ptqg_mc_check;

/* Empirical star-failure rate against the binomial prediction. */
PTQG_API ptqg_status ptqg_check_star_failures(
    int L, double p_s, size_t samples, uint64_t seed, int workers, ptqg_mc_check *out);
/* Random gate faults against the first-order sum on the same assemblies. */
PTQG_API ptqg_status ptqg_check_random_faults(const ptqg_sampling_options *opts, int L, double p_u, ptqg_mc_check *out);

/* ---- resources ---- */

/* log_base: 2, 10, or 0 for e. */
PTQG_API ptqg_status ptqg_r_star_log10(int L, double p_s, double *out);
PTQG_API ptqg_status ptqg_r_star_improved_log10(int L, double p_s, int log_base, double constant, double *out);

/* ---- circuits ---- */

typedef struct ptqg_circuit ptqg_circuit;

PTQG_API ptqg_status ptqg_circuit_parse(const char *text, ptqg_circuit **out);
/* Leaf labels: 0 success, 1 failed, 2 redundant. */
PTQG_API ptqg_status ptqg_circuit_assemble(ptqg_variant variant, int L, int cherries, const int *labels,
    const int *directions, int neighbor_count, ptqg_circuit **out);
PTQG_API size_t ptqg_suite_size(void);
PTQG_API const char *ptqg_suite_name(size_t index);
PTQG_API ptqg_status ptqg_suite_circuit(size_t index, ptqg_circuit **out);
PTQG_API size_t ptqg_circuit_num_qubits(const ptqg_circuit *c);
PTQG_API size_t ptqg_circuit_num_events(const ptqg_circuit *c);
PTQG_API const char *ptqg_circuit_text(ptqg_circuit *c);
/* PTQG_ERR_VERIFICATION when any single fault disagrees with the oracle. */
PTQG_API ptqg_status ptqg_circuit_verify(
    const ptqg_circuit *c, uint64_t seed, size_t *locations_checked, size_t *disagreements);
PTQG_API void ptqg_circuit_free(ptqg_circuit *c);

/* ---- reports ----
 * Tables with provenance, rendered as CSV or JSON. The report_* builders
 * set *out even when they return PTQG_ERR_VERIFICATION. */

typedef struct ptqg_report ptqg_report;

PTQG_API ptqg_status ptqg_report_lmin(double p_s, double p_f_max, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_pf(int L, double p_s, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_renorm(
    ptqg_variant variant, double p_u, double p_P, double p_M, int L, double memory, ptqg_report **out);
/* PTQG_ERR_INFEASIBLE when every point failed. */
PTQG_API ptqg_status ptqg_report_threshold_curve(const double *p_s, size_t n, const ptqg_variant *variants,
    size_t num_variants, const ptqg_threshold_options *opts, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_coefficients(
    const ptqg_sampling_options *opts, const int *L, size_t n, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_correlations(
    const ptqg_sampling_options *opts, int L, double p_u, double p_P, double p_M, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_verify(uint64_t seed, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_resources(
    int L, double p_s, double r_towc, int improved, int log_base, ptqg_report **out);
/* n = 0 with p_s == NULL uses the built-in operating points. */
PTQG_API ptqg_status ptqg_report_compare(
    const double *p_s, const double *p_u, const double *r_towc, size_t n, ptqg_report **out);
PTQG_API ptqg_status ptqg_report_set(ptqg_report *r, const char *key, const char *value);
PTQG_API size_t ptqg_report_num_rows(const ptqg_report *r);
PTQG_API const char *ptqg_report_cell(const ptqg_report *r, size_t row, const char *column);
PTQG_API const char *ptqg_report_render(ptqg_report *r, ptqg_format format);
/* Table only, without provenance or summary. */
PTQG_API const char *ptqg_report_render_data(ptqg_report *r, ptqg_format format);
PTQG_API void ptqg_report_free(ptqg_report *r);

#ifdef __cplusplus
}
#endif

#endif
