/*
 * Copyright (c) 2026, CEL library developers.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the CEL distribution library.
 *
 * Every function returns a cel_status; outputs travel through out
 * parameters. On any failure the thread-local message retrieved with
 * cel_last_error() describes what went wrong. Handles (cel_dist,
 * cel_sample) are created and destroyed explicitly and are immutable, so
 * one handle may be shared freely between threads.
 */

#ifndef CEL_H
#define CEL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CEL_API __declspec(dllexport)
#else
#define CEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cel_status {
  CEL_OK = 0,
  CEL_ERROR_DOMAIN = 1,         /* argument outside the mathematical domain */
  CEL_ERROR_INVALID_ARGUMENT = 2,
  CEL_ERROR_NO_CONVERGENCE = 3, /* iteration budget or bracket exhausted */
  CEL_ERROR_PARSE = 4,
  CEL_ERROR_IO = 5,
  CEL_ERROR_NO_MEMORY = 6,
  CEL_ERROR_INTERNAL = 7
} cel_status;

typedef enum cel_family {
  CEL_FAMILY_CEL = 0,
  CEL_FAMILY_EPL = 1,
  CEL_FAMILY_EP = 2,
  CEL_FAMILY_EL = 3,
  CEL_FAMILY_WEIBULL = 4,
  CEL_FAMILY_GAMMA = 5
} cel_family;

/* Opaque handles. */
typedef struct cel_dist cel_dist;
typedef struct cel_sample cel_sample;

CEL_API const char* cel_version(void);
CEL_API const char* cel_status_name(cel_status status);

/* Message for the most recent failure on the calling thread; valid until
 * the next failing cel_* call on the same thread. */
CEL_API const char* cel_last_error(void);

/* ---- CEL(theta) distribution ------------------------------------------ */

CEL_API cel_status cel_dist_new(double theta, cel_dist** out);
CEL_API void cel_dist_free(cel_dist* dist);
CEL_API double cel_dist_theta(const cel_dist* dist);

CEL_API cel_status cel_dist_pdf(const cel_dist* dist, double x, double* out);
CEL_API cel_status cel_dist_cdf(const cel_dist* dist, double x, double* out);
CEL_API cel_status cel_dist_survival(const cel_dist* dist, double x,
                                     double* out);
CEL_API cel_status cel_dist_hazard(const cel_dist* dist, double x,
                                   double* out);
CEL_API cel_status cel_dist_cumulative_hazard(const cel_dist* dist, double t,
                                              double* out);
CEL_API cel_status cel_dist_glaser_eta(const cel_dist* dist, double t,
                                       double* out);
CEL_API cel_status cel_dist_quantile(const cel_dist* dist, double u,
                                     double* out);
CEL_API cel_status cel_dist_median(const cel_dist* dist, double* out);

/* E[X^r], -1 < r < 1; r outside that range reports that the moment does
 * not exist. */
CEL_API cel_status cel_dist_fractional_moment(const cel_dist* dist, double r,
                                              double* out);
CEL_API cel_status cel_dist_truncated_mean(const cel_dist* dist, double limit,
                                           double* out);
CEL_API cel_status cel_dist_char_fn(const cel_dist* dist, double t,
                                    double* out_re, double* out_im);
/* Entropy order must exceed 1/2 (and differ from 1) or the defining
 * integral diverges. */
CEL_API cel_status cel_dist_renyi_entropy(const cel_dist* dist, double order,
                                          double* out);
CEL_API cel_status cel_dist_tsallis_entropy(const cel_dist* dist, double order,
                                            double* out);
CEL_API cel_status cel_dist_bowley_skewness(const cel_dist* dist, double* out);
CEL_API cel_status cel_dist_moors_kurtosis(const cel_dist* dist, double* out);
CEL_API cel_status cel_dist_order_stat_pdf(const cel_dist* dist, int r, int m,
                                           double x, double* out);

/* n inverse-transform variates; identical (seed, stream_index) give an
 * identical sequence on every platform. */
CEL_API cel_status cel_dist_sample(const cel_dist* dist, size_t n,
                                   uint64_t seed, uint64_t stream_index,
                                   double* out_values);

/* Likelihood-ratio ordering check for theta1 > theta2: writes 1 when the
 * density ratio pdf(.; theta2)/pdf(.; theta1) is strictly decreasing
 * across the ascending positive grid, 0 otherwise. */
CEL_API cel_status cel_lr_ordering_check(double theta1, double theta2,
                                         const double* grid, size_t n,
                                         int* out);

/* ---- samples ----------------------------------------------------------- */

CEL_API cel_status cel_sample_new(const double* values, size_t n,
                                  const char* label, cel_sample** out);
/* One value per line or single-column CSV; '#' comments and blank lines
 * are skipped. */
CEL_API cel_status cel_sample_load(const char* path, cel_sample** out);
CEL_API void cel_sample_free(cel_sample* sample);
CEL_API size_t cel_sample_size(const cel_sample* sample);
/* i-th value in ascending order. */
CEL_API double cel_sample_value(const cel_sample* sample, size_t i);
CEL_API uint64_t cel_sample_checksum(const cel_sample* sample);
CEL_API const char* cel_sample_label(const cel_sample* sample);

/* ---- competitor densities ---------------------------------------------- */

CEL_API cel_status cel_comp_pdf(cel_family family, double p1, double p2,
                                double x, double* out);
CEL_API cel_status cel_comp_cdf(cel_family family, double p1, double p2,
                                double x, double* out);
CEL_API cel_status cel_comp_log_likelihood(cel_family family, double p1,
                                           double p2, const cel_sample* sample,
                                           double* out);

/* ---- fitting ------------------------------------------------------------ */

typedef struct cel_fit_result {
  cel_family family;
  double estimates[2];
  int n_params;
  double log_likelihood;
  int iterations;
  int converged;
  /* CEL fits only; has_interval is 0 when the observed information at the
   * optimum is not positive. */
  int has_interval;
  double std_error;
  double ci_lower;
  double ci_upper;
} cel_fit_result;

/* Maximum-likelihood fit. Non-positive tol, alpha, and max_iterations
 * select the defaults (1e-10, 0.05, and 200 Newton / 2000 simplex
 * iterations); alpha is the two-sided miss probability of the CEL
 * confidence interval. */
CEL_API cel_status cel_fit(const cel_sample* sample, cel_family family,
                           double tol, double alpha, int max_iterations,
                           cel_fit_result* out);

/* ---- goodness of fit ---------------------------------------------------- */

typedef struct cel_gof_report {
  cel_family family;
  int fit_ok;
  double estimates[2];
  int n_params;
  int n;
  double neg2ll;
  double aic;
  double bic;
  double aicc;
  double ks_stat;
  double ks_pvalue;
} cel_gof_report;

/* Fits each family and fills out_reports (capacity n_families), sorted by
 * AIC then KS; failed fits are flagged rows, not errors. bootstrap_ks != 0
 * replaces the plug-in p-value with a parametric bootstrap seeded by
 * `seed`. */
CEL_API cel_status cel_model_comparison(const cel_sample* sample,
                                        const cel_family* families,
                                        size_t n_families, int bootstrap_ks,
                                        uint64_t seed,
                                        cel_gof_report* out_reports);

/* P(D_n >= d) for the one-sample Kolmogorov-Smirnov statistic: exact
 * finite-n distribution for n <= 140, asymptotic beyond. */
CEL_API cel_status cel_ks_pvalue(double d, int n, double* out);

/* ---- Monte Carlo study -------------------------------------------------- */

typedef struct cel_sim_summary {
  int n;
  int replications;
  double bias;
  double mse;
  double variance;
  double mean_estimate;
  int failures;
} cel_sim_summary;

/* Estimator-quality study: for each size, `replications` samples from
 * CEL(theta) are drawn and refit. threads = 0 picks the hardware
 * concurrency; results are independent of the thread count. */
CEL_API cel_status cel_simulation_study(double theta, const int* sizes,
                                        size_t n_sizes, int replications,
                                        uint64_t seed, int threads,
                                        cel_sim_summary* out_summaries);

#ifdef __cplusplus
}
#endif

#endif /* CEL_H */
