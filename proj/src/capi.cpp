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

#include "cel.h"

#include <complex>
#include <cstring>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "cel/competitors.hpp"
#include "cel/distribution.hpp"
#include "cel/fitting.hpp"
#include "cel/gof.hpp"
#include "cel/numerics.hpp"
#include "cel/properties.hpp"
#include "cel/sample.hpp"
#include "cel/simulation.hpp"

struct cel_dist {
  cel::CelDistribution dist;
};

struct cel_sample {
  cel::Sample sample;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what; }

cel::Family to_family(cel_family f) {
  switch (f) {
    case CEL_FAMILY_CEL: return cel::Family::CEL;
    case CEL_FAMILY_EPL: return cel::Family::EPL;
    case CEL_FAMILY_EP: return cel::Family::EP;
    case CEL_FAMILY_EL: return cel::Family::EL;
    case CEL_FAMILY_WEIBULL: return cel::Family::WEIBULL;
    case CEL_FAMILY_GAMMA: return cel::Family::GAMMA;
  }
  throw std::invalid_argument("invalid cel_family value");
}

cel_family from_family(cel::Family f) {
  switch (f) {
    case cel::Family::CEL: return CEL_FAMILY_CEL;
    case cel::Family::EPL: return CEL_FAMILY_EPL;
    case cel::Family::EP: return CEL_FAMILY_EP;
    case cel::Family::EL: return CEL_FAMILY_EL;
    case cel::Family::WEIBULL: return CEL_FAMILY_WEIBULL;
    case cel::Family::GAMMA: return CEL_FAMILY_GAMMA;
  }
  return CEL_FAMILY_CEL;
}

template <typename Fn>
cel_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return CEL_OK;
  } catch (const cel::ParseError& e) {
    set_error(e.what());
    return CEL_ERROR_PARSE;
  } catch (const cel::ConvergenceError& e) {
    set_error(e.what());
    return CEL_ERROR_NO_CONVERGENCE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return CEL_ERROR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return CEL_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return CEL_ERROR_NO_MEMORY;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return CEL_ERROR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return CEL_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return CEL_ERROR_INTERNAL;
  }
}

cel_status require(bool ok, const char* message) {
  if (!ok) {
    set_error(message);
    return CEL_ERROR_INVALID_ARGUMENT;
  }
  return CEL_OK;
}

void fill_fit_result(const cel::FitResult& fit, cel_fit_result* out) {
  std::memset(out, 0, sizeof(*out));
  out->family = from_family(fit.family);
  out->n_params = static_cast<int>(fit.estimates.size());
  for (std::size_t i = 0; i < fit.estimates.size() && i < 2; ++i) {
    out->estimates[i] = fit.estimates[i];
  }
  out->log_likelihood = fit.log_likelihood;
  out->iterations = fit.iterations;
  out->converged = fit.converged ? 1 : 0;
  if (fit.std_error.has_value()) {
    out->has_interval = 1;
    out->std_error = *fit.std_error;
    out->ci_lower = *fit.ci_lower;
    out->ci_upper = *fit.ci_upper;
  }
}

}  // namespace

extern "C" {

const char* cel_version(void) { return "1.0.0"; }

const char* cel_status_name(cel_status status) {
  switch (status) {
    case CEL_OK: return "ok";
    case CEL_ERROR_DOMAIN: return "domain error";
    case CEL_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CEL_ERROR_NO_CONVERGENCE: return "no convergence";
    case CEL_ERROR_PARSE: return "parse error";
    case CEL_ERROR_IO: return "i/o error";
    case CEL_ERROR_NO_MEMORY: return "out of memory";
    case CEL_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* cel_last_error(void) { return g_last_error.c_str(); }

cel_status cel_dist_new(double theta, cel_dist** out) {
  if (cel_status s = require(out != nullptr, "out must not be null"); s != CEL_OK) return s;
  return guarded([&] { *out = new cel_dist{cel::CelDistribution(theta)}; });
}

void cel_dist_free(cel_dist* dist) { delete dist; }

double cel_dist_theta(const cel_dist* dist) { return dist->dist.theta(); }

#define CEL_SCALAR_OP(NAME, EXPR)                                             \
  cel_status NAME(const cel_dist* dist, double arg, double* out) {            \
    if (cel_status s = require(dist != nullptr && out != nullptr,             \
                               "null argument");                              \
        s != CEL_OK)                                                          \
      return s;                                                               \
    return guarded([&] { *out = (EXPR); });                                   \
  }

CEL_SCALAR_OP(cel_dist_pdf, dist->dist.pdf(arg))
CEL_SCALAR_OP(cel_dist_cdf, dist->dist.cdf(arg))
CEL_SCALAR_OP(cel_dist_survival, dist->dist.survival(arg))
CEL_SCALAR_OP(cel_dist_hazard, dist->dist.hazard(arg))
CEL_SCALAR_OP(cel_dist_cumulative_hazard, dist->dist.cumulative_hazard(arg))
CEL_SCALAR_OP(cel_dist_glaser_eta, dist->dist.glaser_eta(arg))
CEL_SCALAR_OP(cel_dist_quantile, dist->dist.quantile(arg))
CEL_SCALAR_OP(cel_dist_fractional_moment, cel::fractional_moment(dist->dist, arg))
CEL_SCALAR_OP(cel_dist_truncated_mean, cel::truncated_mean(dist->dist, arg))
CEL_SCALAR_OP(cel_dist_renyi_entropy,
              cel::renyi_entropy(dist->dist, cel::EntropyOrder(arg)))
CEL_SCALAR_OP(cel_dist_tsallis_entropy,
              cel::tsallis_entropy(dist->dist, cel::EntropyOrder(arg)))

#undef CEL_SCALAR_OP

cel_status cel_dist_median(const cel_dist* dist, double* out) {
  if (cel_status s = require(dist && out, "null argument"); s != CEL_OK) return s;
  return guarded([&] { *out = dist->dist.median(); });
}

cel_status cel_dist_bowley_skewness(const cel_dist* dist, double* out) {
  if (cel_status s = require(dist && out, "null argument"); s != CEL_OK) return s;
  return guarded([&] { *out = cel::bowley_skewness(dist->dist); });
}

cel_status cel_dist_moors_kurtosis(const cel_dist* dist, double* out) {
  if (cel_status s = require(dist && out, "null argument"); s != CEL_OK) return s;
  return guarded([&] { *out = cel::moors_kurtosis(dist->dist); });
}

cel_status cel_dist_char_fn(const cel_dist* dist, double t, double* out_re,
                            double* out_im) {
  if (cel_status s = require(dist && out_re && out_im, "null argument");
      s != CEL_OK)
    return s;
  return guarded([&] {
    const std::complex<double> v = cel::char_fn(dist->dist, t);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

cel_status cel_dist_order_stat_pdf(const cel_dist* dist, int r, int m,
                                   double x, double* out) {
  if (cel_status s = require(dist && out, "null argument"); s != CEL_OK) return s;
  return guarded([&] {
    *out = cel::order_stat_pdf(dist->dist, cel::OrderStatSpec(r, m), x);
  });
}

cel_status cel_dist_sample(const cel_dist* dist, size_t n, uint64_t seed,
                           uint64_t stream_index, double* out_values) {
  if (cel_status s = require(dist && out_values && n > 0,
                             "null argument or empty request");
      s != CEL_OK)
    return s;
  return guarded([&] {
    cel::SeededStream stream{seed, stream_index, 0};
    const std::vector<double> draw = cel::sample_cel(dist->dist, n, stream);
    std::memcpy(out_values, draw.data(), n * sizeof(double));
  });
}

cel_status cel_lr_ordering_check(double theta1, double theta2,
                                 const double* grid, size_t n, int* out) {
  if (cel_status s = require(grid && out && n >= 2,
                             "null argument or grid shorter than 2");
      s != CEL_OK)
    return s;
  return guarded([&] {
    *out = cel::lr_ordering_check(cel::Theta(theta1), cel::Theta(theta2),
                                  std::span<const double>(grid, n))
               ? 1
               : 0;
  });
}

cel_status cel_sample_new(const double* values, size_t n, const char* label,
                          cel_sample** out) {
  if (cel_status s = require(values && out && n > 0,
                             "null argument or empty sample");
      s != CEL_OK)
    return s;
  return guarded([&] {
    *out = new cel_sample{cel::Sample(std::vector<double>(values, values + n),
                                      label ? label : "")};
  });
}

cel_status cel_sample_load(const char* path, cel_sample** out) {
  if (cel_status s = require(path && out, "null argument"); s != CEL_OK) return s;
  return guarded([&] { *out = new cel_sample{cel::Sample::load(path)}; });
}

void cel_sample_free(cel_sample* sample) { delete sample; }

size_t cel_sample_size(const cel_sample* sample) {
  return sample->sample.size();
}

double cel_sample_value(const cel_sample* sample, size_t i) {
  return sample->sample.values()[i];
}

uint64_t cel_sample_checksum(const cel_sample* sample) {
  return sample->sample.checksum();
}

const char* cel_sample_label(const cel_sample* sample) {
  return sample->sample.label().c_str();
}

cel_status cel_comp_pdf(cel_family family, double p1, double p2, double x,
                        double* out) {
  if (cel_status s = require(out != nullptr, "out must not be null"); s != CEL_OK)
    return s;
  return guarded([&] {
    *out = cel::comp_pdf(cel::CompetitorParams(to_family(family), p1, p2), x);
  });
}

cel_status cel_comp_cdf(cel_family family, double p1, double p2, double x,
                        double* out) {
  if (cel_status s = require(out != nullptr, "out must not be null"); s != CEL_OK)
    return s;
  return guarded([&] {
    *out = cel::comp_cdf(cel::CompetitorParams(to_family(family), p1, p2), x);
  });
}

cel_status cel_comp_log_likelihood(cel_family family, double p1, double p2,
                                   const cel_sample* sample, double* out) {
  if (cel_status s = require(sample && out, "null argument"); s != CEL_OK)
    return s;
  return guarded([&] {
    *out = cel::comp_log_likelihood(
        cel::CompetitorParams(to_family(family), p1, p2), sample->sample);
  });
}

cel_status cel_fit(const cel_sample* sample, cel_family family, double tol,
                   double alpha, int max_iterations, cel_fit_result* out) {
  if (cel_status s = require(sample && out, "null argument"); s != CEL_OK)
    return s;
  return guarded([&] {
    const cel::Family f = to_family(family);
    cel::FitResult fit;
    if (f == cel::Family::CEL) {
      cel::CelFitOptions opt;
      if (tol > 0.0) opt.tol = tol;
      if (alpha > 0.0) opt.alpha = alpha;
      if (max_iterations > 0) opt.max_iterations = max_iterations;
      fit = cel::fit_cel(sample->sample, opt);
    } else {
      cel::CompetitorFitOptions opt;
      if (tol > 0.0) opt.tol = tol;
      if (max_iterations > 0) opt.max_iterations = max_iterations;
      fit = cel::fit_competitor(f, sample->sample, opt);
    }
    fill_fit_result(fit, out);
  });
}

cel_status cel_model_comparison(const cel_sample* sample,
                                const cel_family* families, size_t n_families,
                                int bootstrap_ks, uint64_t seed,
                                cel_gof_report* out_reports) {
  if (cel_status s = require(sample && families && out_reports && n_families > 0,
                             "null argument or empty family list");
      s != CEL_OK)
    return s;
  return guarded([&] {
    std::vector<cel::Family> fams;
    fams.reserve(n_families);
    for (size_t i = 0; i < n_families; ++i) {
      fams.push_back(to_family(families[i]));
    }
    cel::ComparisonOptions opt;
    opt.bootstrap_pvalue = bootstrap_ks != 0;
    opt.seed = seed;
    const std::vector<cel::GofReport> reports =
        cel::model_comparison(sample->sample, fams, opt);
    for (size_t i = 0; i < reports.size(); ++i) {
      const cel::GofReport& r = reports[i];
      cel_gof_report& o = out_reports[i];
      std::memset(&o, 0, sizeof(o));
      o.family = from_family(r.family);
      o.fit_ok = r.fit_ok ? 1 : 0;
      o.n_params = r.k;
      o.n = r.n;
      for (std::size_t j = 0; j < r.estimates.size() && j < 2; ++j) {
        o.estimates[j] = r.estimates[j];
      }
      o.neg2ll = r.neg2ll;
      o.aic = r.aic;
      o.bic = r.bic;
      o.aicc = r.aicc;
      o.ks_stat = r.ks_stat;
      o.ks_pvalue = r.ks_pvalue;
    }
  });
}

cel_status cel_ks_pvalue(double d, int n, double* out) {
  if (cel_status s = require(out != nullptr, "out must not be null"); s != CEL_OK)
    return s;
  return guarded([&] { *out = cel::ks_pvalue(d, n); });
}

cel_status cel_simulation_study(double theta, const int* sizes, size_t n_sizes,
                                int replications, uint64_t seed, int threads,
                                cel_sim_summary* out_summaries) {
  if (cel_status s = require(sizes && out_summaries && n_sizes > 0,
                             "null argument or empty size list");
      s != CEL_OK)
    return s;
  return guarded([&] {
    cel::SimulationOptions opt;
    opt.threads = threads;
    const std::vector<cel::SimSummary> summaries = cel::run_simulation_study(
        cel::Theta(theta), std::span<const int>(sizes, n_sizes), replications,
        seed, opt);
    for (size_t i = 0; i < summaries.size(); ++i) {
      const cel::SimSummary& r = summaries[i];
      out_summaries[i] = cel_sim_summary{r.n,   r.replications, r.bias,
                                         r.mse, r.variance,     r.mean_estimate,
                                         r.failures};
    }
  });
}

}  // extern "C"
