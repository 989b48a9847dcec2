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

// Command-line front end for the CEL distribution library. Talks to the
// shared library exclusively through the C API in cel.h; report assembly
// and serialization live here.

#include <cctype>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cel.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr std::uint64_t kDefaultSeed = 20260811;

const cel_family kAllFamilies[] = {CEL_FAMILY_CEL,     CEL_FAMILY_EPL,
                                   CEL_FAMILY_EP,      CEL_FAMILY_EL,
                                   CEL_FAMILY_WEIBULL, CEL_FAMILY_GAMMA};

const char* family_label(cel_family f) {
  switch (f) {
    case CEL_FAMILY_CEL: return "cel";
    case CEL_FAMILY_EPL: return "epl";
    case CEL_FAMILY_EP: return "ep";
    case CEL_FAMILY_EL: return "el";
    case CEL_FAMILY_WEIBULL: return "weibull";
    case CEL_FAMILY_GAMMA: return "gamma";
  }
  return "?";
}

std::optional<cel_family> family_from_label(std::string name) {
  for (char& c : name) c = static_cast<char>(std::tolower(c));
  for (cel_family f : kAllFamilies) {
    if (name == family_label(f)) return f;
  }
  return std::nullopt;
}

int exit_code_for(cel_status status) {
  return status == CEL_ERROR_NO_CONVERGENCE ? kExitNumerical : kExitUsage;
}

int fail(cel_status status) {
  std::cerr << "error: " << cel_last_error() << "\n";
  return exit_code_for(status);
}

std::string checksum_hex(const cel_sample* sample) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "0x%016" PRIx64, cel_sample_checksum(sample));
  return buf;
}

// RAII wrappers around the C handles.
struct SampleHandle {
  cel_sample* ptr = nullptr;
  ~SampleHandle() { cel_sample_free(ptr); }
};

struct DistHandle {
  cel_dist* ptr = nullptr;
  ~DistHandle() { cel_dist_free(ptr); }
};

int emit_report(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return kExitSuccess;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << text;
  return kExitSuccess;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CEL_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') {
      return static_cast<std::uint64_t>(v);
    }
    std::cerr << "warning: ignoring unparseable CEL_SEED='" << env << "'\n";
  }
  return kDefaultSeed;
}

json fit_to_json(const cel_fit_result& fit) {
  json j;
  j["family"] = family_label(fit.family);
  std::vector<double> estimates(fit.estimates, fit.estimates + fit.n_params);
  j["estimates"] = estimates;
  j["log_likelihood"] = fit.log_likelihood;
  j["neg2_log_likelihood"] = -2.0 * fit.log_likelihood;
  j["iterations"] = fit.iterations;
  j["converged"] = fit.converged != 0;
  if (fit.has_interval) {
    j["std_error"] = fit.std_error;
    j["ci_lower"] = fit.ci_lower;
    j["ci_upper"] = fit.ci_upper;
  }
  return j;
}

json report_to_json(const cel_gof_report& r) {
  json j;
  j["family"] = family_label(r.family);
  j["fit_ok"] = r.fit_ok != 0;
  if (r.fit_ok) {
    std::vector<double> estimates(r.estimates, r.estimates + r.n_params);
    j["estimates"] = estimates;
    j["k"] = r.n_params;
    j["n"] = r.n;
    j["neg2ll"] = r.neg2ll;
    j["aic"] = r.aic;
    j["bic"] = r.bic;
    j["aicc"] = r.aicc;
    j["ks_stat"] = r.ks_stat;
    j["ks_pvalue"] = r.ks_pvalue;
  }
  return j;
}

// ---- compare: CSV and plot-data emission ---------------------------------

int write_comparison_csv(const std::string& path,
                         const std::vector<cel_gof_report>& reports) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  out << "family,fit_ok,estimate1,estimate2,neg2ll,aic,bic,aicc,ks_stat,"
         "ks_pvalue\n";
  char buf[512];
  for (const cel_gof_report& r : reports) {
    if (!r.fit_ok) {
      out << family_label(r.family) << ",0,,,,,,,,\n";
      continue;
    }
    if (r.n_params == 1) {
      std::snprintf(buf, sizeof(buf),
                    "%s,1,%.17g,,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    family_label(r.family), r.estimates[0], r.neg2ll, r.aic,
                    r.bic, r.aicc, r.ks_stat, r.ks_pvalue);
    } else {
      std::snprintf(buf, sizeof(buf),
                    "%s,1,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    family_label(r.family), r.estimates[0], r.estimates[1],
                    r.neg2ll, r.aic, r.bic, r.aicc, r.ks_stat, r.ks_pvalue);
    }
    out << buf;
  }
  return kExitSuccess;
}

double family_cdf(const cel_gof_report& r, double x) {
  double v = 0.0;
  if (r.family == CEL_FAMILY_CEL) {
    DistHandle d;
    if (cel_dist_new(r.estimates[0], &d.ptr) != CEL_OK) return 0.0;
    cel_dist_cdf(d.ptr, x, &v);
  } else {
    cel_comp_cdf(r.family, r.estimates[0], r.estimates[1], x, &v);
  }
  return v;
}

double family_pdf(const cel_gof_report& r, double x) {
  double v = 0.0;
  if (r.family == CEL_FAMILY_CEL) {
    DistHandle d;
    if (cel_dist_new(r.estimates[0], &d.ptr) != CEL_OK) return 0.0;
    cel_dist_pdf(d.ptr, x, &v);
  } else if (x > 0.0) {
    cel_comp_pdf(r.family, r.estimates[0], r.estimates[1], x, &v);
  }
  return v;
}

double family_quantile(const cel_gof_report& r, double u) {
  if (r.family == CEL_FAMILY_CEL) {
    DistHandle d;
    double v = 0.0;
    if (cel_dist_new(r.estimates[0], &d.ptr) == CEL_OK) {
      cel_dist_quantile(d.ptr, u, &v);
    }
    return v;
  }
  // Competitors expose no quantile; invert the cdf by bisection.
  double hi = 1.0;
  while (family_cdf(r, hi) < u && hi < 1e300) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (family_cdf(r, mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

int write_plot_data(const std::string& dir, const cel_sample* sample,
                    const std::vector<cel_gof_report>& reports) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << dir << "\n";
    return kExitUsage;
  }
  const std::size_t n = cel_sample_size(sample);
  const double xmax = cel_sample_value(sample, n - 1) * 1.05;

  auto open_csv = [&](const std::string& name, const char* header,
                      std::ofstream& out) {
    out.open(dir + "/" + name);
    if (out) out << header << "\n";
    return static_cast<bool>(out);
  };

  std::ofstream ecdf_csv;
  if (!open_csv("ecdf.csv", "x,ecdf", ecdf_csv)) return kExitUsage;
  char buf[128];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", cel_sample_value(sample, i),
                  static_cast<double>(i + 1) / static_cast<double>(n));
    ecdf_csv << buf;
  }

  for (const cel_gof_report& r : reports) {
    if (!r.fit_ok) continue;
    const std::string tag = family_label(r.family);
    std::ofstream pdf_csv, cdf_csv, pp_csv, qq_csv;
    if (!open_csv("pdf_" + tag + ".csv", "x,pdf", pdf_csv)) return kExitUsage;
    if (!open_csv("cdf_" + tag + ".csv", "x,cdf", cdf_csv)) return kExitUsage;
    if (!open_csv("pp_" + tag + ".csv", "theoretical,empirical", pp_csv))
      return kExitUsage;
    if (!open_csv("qq_" + tag + ".csv", "theoretical,empirical", qq_csv))
      return kExitUsage;

    constexpr int kCurvePoints = 256;
    for (int i = 0; i <= kCurvePoints; ++i) {
      const double x = xmax * i / kCurvePoints;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", x,
                    family_pdf(r, i == 0 ? 1e-9 * xmax : x));
      pdf_csv << buf;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", x, family_cdf(r, x));
      cdf_csv << buf;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double x = cel_sample_value(sample, i);
      const double plot_pos =
          (static_cast<double>(i) + 0.5) / static_cast<double>(n);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", family_cdf(r, x),
                    plot_pos);
      pp_csv << buf;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n",
                    family_quantile(r, plot_pos), x);
      qq_csv << buf;
    }
  }
  return kExitSuccess;
}

// ---- subcommand payload --------------------------------------------------

struct FitArgs {
  std::string dataset;
  std::string dist = "cel";
  std::string out;
  double tol = 1e-10;
  double alpha = 0.05;
  int max_iter = 0;  // 0 = library default
};

struct CompareArgs {
  std::string dataset;
  std::string dist = "all";
  std::string out;
  std::string csv;
  std::string plot_data;
  bool bootstrap_ks = false;
  std::optional<std::uint64_t> seed;
};

struct SimulateArgs {
  double theta = 2.0;
  std::vector<int> sizes = {20, 30, 50, 90, 150, 200};
  int reps = 2500;
  std::optional<std::uint64_t> seed;
  double tol = 1e-10;
  std::string out;
};

struct EvalArgs {
  std::string fn;
  double theta = 0.0;
  std::optional<double> x;
  std::optional<double> u;
  std::optional<double> r;
  std::optional<double> order;
  int n = 1;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_fit(const FitArgs& args) {
  const auto family = family_from_label(args.dist);
  if (!family) {
    std::cerr << "error: unknown distribution '" << args.dist << "'\n";
    return kExitUsage;
  }
  SampleHandle sample;
  if (cel_status s = cel_sample_load(args.dataset.c_str(), &sample.ptr);
      s != CEL_OK) {
    return fail(s);
  }
  cel_fit_result fit;
  if (cel_status s = cel_fit(sample.ptr, *family, args.tol, args.alpha,
                             args.max_iter, &fit);
      s != CEL_OK) {
    return fail(s);
  }
  json report;
  report["schema_version"] = "1";
  report["command"] = "fit";
  report["inputs"] = {{"dataset", args.dataset},
                      {"dataset_checksum", checksum_hex(sample.ptr)},
                      {"n", cel_sample_size(sample.ptr)},
                      {"dist", args.dist},
                      {"tol", args.tol},
                      {"alpha", args.alpha},
                      {"max_iter", args.max_iter}};
  report["results"] = fit_to_json(fit);
  const int rc = emit_report(report, args.out);
  if (rc != kExitSuccess) return rc;
  return fit.converged ? kExitSuccess : kExitNumerical;
}

int run_compare(const CompareArgs& args) {
  std::vector<cel_family> families;
  if (args.dist == "all") {
    families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else {
    std::string token;
    std::istringstream stream(args.dist);
    while (std::getline(stream, token, ',')) {
      const auto family = family_from_label(token);
      if (!family) {
        std::cerr << "error: unknown distribution '" << token << "'\n";
        return kExitUsage;
      }
      families.push_back(*family);
    }
    if (families.empty()) {
      std::cerr << "error: --dist selected no families\n";
      return kExitUsage;
    }
  }
  SampleHandle sample;
  if (cel_status s = cel_sample_load(args.dataset.c_str(), &sample.ptr);
      s != CEL_OK) {
    return fail(s);
  }
  const std::uint64_t seed = args.seed.value_or(default_seed());
  std::vector<cel_gof_report> reports(families.size());
  if (cel_status s = cel_model_comparison(sample.ptr, families.data(),
                                          families.size(),
                                          args.bootstrap_ks ? 1 : 0, seed,
                                          reports.data());
      s != CEL_OK) {
    return fail(s);
  }

  json report;
  report["schema_version"] = "1";
  report["command"] = "compare";
  report["inputs"] = {{"dataset", args.dataset},
                      {"dataset_checksum", checksum_hex(sample.ptr)},
                      {"n", cel_sample_size(sample.ptr)},
                      {"dist", args.dist},
                      {"bootstrap_ks", args.bootstrap_ks},
                      {"seed", seed}};
  json rows = json::array();
  for (const cel_gof_report& r : reports) {
    rows.push_back(report_to_json(r));
  }
  report["results"] = {{"reports", rows}};

  if (!args.csv.empty()) {
    if (int rc = write_comparison_csv(args.csv, reports); rc != kExitSuccess) {
      return rc;
    }
  }
  if (!args.plot_data.empty()) {
    if (int rc = write_plot_data(args.plot_data, sample.ptr, reports);
        rc != kExitSuccess) {
      return rc;
    }
  }
  return emit_report(report, args.out);
}

int run_simulate(const SimulateArgs& args) {
  if (args.theta <= 0.0) {
    std::cerr << "error: --theta must be > 0\n";
    return kExitUsage;
  }
  if (args.reps < 2) {
    std::cerr << "error: --reps must be >= 2\n";
    return kExitUsage;
  }
  for (int n : args.sizes) {
    if (n < 1) {
      std::cerr << "error: --sizes entries must be >= 1\n";
      return kExitUsage;
    }
  }
  const std::uint64_t seed = args.seed.value_or(default_seed());
  std::vector<cel_sim_summary> summaries(args.sizes.size());
  if (cel_status s = cel_simulation_study(args.theta, args.sizes.data(),
                                          args.sizes.size(), args.reps, seed,
                                          0, summaries.data());
      s != CEL_OK) {
    return fail(s);
  }
  json report;
  report["schema_version"] = "1";
  report["command"] = "simulate";
  report["inputs"] = {{"theta", args.theta},
                      {"sizes", args.sizes},
                      {"reps", args.reps},
                      {"seed", seed},
                      {"tol", args.tol}};
  json rows = json::array();
  for (const cel_sim_summary& s : summaries) {
    rows.push_back({{"n", s.n},
                    {"replications", s.replications},
                    {"bias", s.bias},
                    {"mse", s.mse},
                    {"variance", s.variance},
                    {"mean_estimate", s.mean_estimate},
                    {"failures", s.failures}});
  }
  report["results"] = {{"summaries", rows}};
  return emit_report(report, args.out);
}

int run_eval(const EvalArgs& args) {
  if (args.theta <= 0.0) {
    std::cerr << "error: --theta must be > 0\n";
    return kExitUsage;
  }
  DistHandle dist;
  if (cel_status s = cel_dist_new(args.theta, &dist.ptr); s != CEL_OK) {
    return fail(s);
  }

  json inputs = {{"theta", args.theta}, {"fn", args.fn}};
  json results;
  auto need = [&](const std::optional<double>& v, const char* flag) {
    if (!v.has_value()) {
      std::cerr << "error: --fn " << args.fn << " requires " << flag << "\n";
    }
    return v.has_value();
  };

  cel_status status = CEL_OK;
  double value = 0.0;
  if (args.fn == "pdf" || args.fn == "cdf" || args.fn == "survival" ||
      args.fn == "hazard" || args.fn == "cumhaz" || args.fn == "eta") {
    if (!need(args.x, "--x")) return kExitUsage;
    inputs["x"] = *args.x;
    if (args.fn == "pdf") status = cel_dist_pdf(dist.ptr, *args.x, &value);
    if (args.fn == "cdf") status = cel_dist_cdf(dist.ptr, *args.x, &value);
    if (args.fn == "survival")
      status = cel_dist_survival(dist.ptr, *args.x, &value);
    if (args.fn == "hazard")
      status = cel_dist_hazard(dist.ptr, *args.x, &value);
    if (args.fn == "cumhaz")
      status = cel_dist_cumulative_hazard(dist.ptr, *args.x, &value);
    if (args.fn == "eta")
      status = cel_dist_glaser_eta(dist.ptr, *args.x, &value);
    results["value"] = value;
  } else if (args.fn == "quantile") {
    if (!need(args.u, "--u")) return kExitUsage;
    inputs["u"] = *args.u;
    status = cel_dist_quantile(dist.ptr, *args.u, &value);
    results["value"] = value;
  } else if (args.fn == "median") {
    status = cel_dist_median(dist.ptr, &value);
    results["value"] = value;
  } else if (args.fn == "skewness") {
    status = cel_dist_bowley_skewness(dist.ptr, &value);
    results["value"] = value;
  } else if (args.fn == "kurtosis") {
    status = cel_dist_moors_kurtosis(dist.ptr, &value);
    results["value"] = value;
  } else if (args.fn == "moment") {
    if (!need(args.r, "--r")) return kExitUsage;
    inputs["r"] = *args.r;
    status = cel_dist_fractional_moment(dist.ptr, *args.r, &value);
    results["value"] = value;
  } else if (args.fn == "truncated-mean") {
    if (!need(args.x, "--x")) return kExitUsage;
    inputs["x"] = *args.x;
    status = cel_dist_truncated_mean(dist.ptr, *args.x, &value);
    results["value"] = value;
  } else if (args.fn == "charfn") {
    if (!need(args.x, "--x")) return kExitUsage;
    inputs["x"] = *args.x;
    double re = 0.0, im = 0.0;
    status = cel_dist_char_fn(dist.ptr, *args.x, &re, &im);
    results["real"] = re;
    results["imag"] = im;
  } else if (args.fn == "renyi" || args.fn == "tsallis") {
    if (!need(args.order, "--order")) return kExitUsage;
    inputs["order"] = *args.order;
    status = args.fn == "renyi"
                 ? cel_dist_renyi_entropy(dist.ptr, *args.order, &value)
                 : cel_dist_tsallis_entropy(dist.ptr, *args.order, &value);
    results["value"] = value;
  } else if (args.fn == "sample") {
    if (args.n < 1) {
      std::cerr << "error: --n must be >= 1\n";
      return kExitUsage;
    }
    const std::uint64_t seed = args.seed.value_or(default_seed());
    inputs["n"] = args.n;
    inputs["seed"] = seed;
    std::vector<double> values(static_cast<std::size_t>(args.n));
    status = cel_dist_sample(dist.ptr, values.size(), seed, 0, values.data());
    results["values"] = values;
  } else {
    std::cerr << "error: unknown --fn '" << args.fn << "'\n";
    return kExitUsage;
  }

  if (status != CEL_OK) {
    return fail(status);
  }
  json report;
  report["schema_version"] = "1";
  report["command"] = "eval";
  report["inputs"] = inputs;
  report["results"] = results;
  return emit_report(report, args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compounded exponential-Lindley (CEL) lifetime distribution "
               "toolkit"};
  app.require_subcommand(1);

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit", "Maximum-likelihood fit of one family to a dataset");
  fit->add_option("dataset", fit_args.dataset, "dataset file")->required();
  fit->add_option("--dist", fit_args.dist,
                  "cel|epl|ep|el|weibull|gamma (default cel)");
  fit->add_option("--tol", fit_args.tol, "convergence tolerance");
  fit->add_option("--alpha", fit_args.alpha, "CI miss probability");
  fit->add_option("--max-iter", fit_args.max_iter,
                  "iteration cap (0 = default)");
  fit->add_option("--out", fit_args.out, "write the JSON report here");

  CompareArgs cmp_args;
  CLI::App* cmp = app.add_subcommand(
      "compare", "Fit families and rank them by information criteria and KS");
  cmp->add_option("dataset", cmp_args.dataset, "dataset file")->required();
  cmp->add_option("--dist", cmp_args.dist,
                  "'all' or a comma list of families");
  cmp->add_option("--csv", cmp_args.csv, "also write a flat CSV table");
  cmp->add_option("--plot-data", cmp_args.plot_data,
                  "directory for pdf/cdf/ecdf/pp/qq curve files");
  cmp->add_flag("--bootstrap-ks", cmp_args.bootstrap_ks,
                "parametric-bootstrap KS p-values instead of plug-in");
  cmp->add_option("--seed", cmp_args.seed, "bootstrap seed");
  cmp->add_option("--out", cmp_args.out, "write the JSON report here");

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Monte Carlo study of the CEL estimator");
  sim->add_option("--theta", sim_args.theta, "true parameter (default 2)");
  sim->add_option("--sizes", sim_args.sizes,
                  "sample sizes (default 20,30,50,90,150,200)")
      ->delimiter(',');
  sim->add_option("--reps", sim_args.reps, "replications (default 2500)");
  sim->add_option("--seed", sim_args.seed, "stream seed");
  sim->add_option("--tol", sim_args.tol, "per-fit tolerance");
  sim->add_option("--out", sim_args.out, "write the JSON report here");

  EvalArgs eval_args;
  CLI::App* ev = app.add_subcommand(
      "eval", "Evaluate a scalar property or draw a sample");
  ev->add_option("--fn", eval_args.fn,
                 "pdf|cdf|survival|hazard|cumhaz|eta|quantile|median|"
                 "skewness|kurtosis|moment|truncated-mean|charfn|renyi|"
                 "tsallis|sample")
      ->required();
  ev->add_option("--theta", eval_args.theta, "parameter")->required();
  ev->add_option("--x", eval_args.x, "abscissa / limit / frequency");
  ev->add_option("--u", eval_args.u, "probability level");
  ev->add_option("--r", eval_args.r, "moment order");
  ev->add_option("--order", eval_args.order, "entropy order");
  ev->add_option("--n", eval_args.n, "sample size");
  ev->add_option("--seed", eval_args.seed, "sampling seed");
  ev->add_option("--out", eval_args.out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (fit->parsed()) return run_fit(fit_args);
  if (cmp->parsed()) return run_compare(cmp_args);
  if (sim->parsed()) return run_simulate(sim_args);
  if (ev->parsed()) return run_eval(eval_args);
  return kExitUsage;
}
