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

#ifndef CEL_GOF_HPP
#define CEL_GOF_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cel/competitors.hpp"
#include "cel/sample.hpp"

namespace cel {

struct GofReport {
  Family family = Family::CEL;
  bool fit_ok = false;
  std::string fail_reason;
  std::vector<double> estimates;
  int k = 0;  // parameter count
  int n = 0;  // sample size
  double neg2ll = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  double aicc = 0.0;  // +inf when n - k - 1 <= 0
  double ks_stat = 0.0;
  double ks_pvalue = 0.0;
};

/// Empirical distribution function (#{x_i <= x}) / n, right-continuous.
double ecdf(const Sample& s, double x);

/// Two-sided Kolmogorov-Smirnov statistic sup_x |F_n(x) - F0(x)| against a
/// continuous cdf, evaluated exactly from the order statistics as
/// max_i max(i/n - F0(x_(i)), F0(x_(i)) - (i-1)/n).
double ks_statistic(const Sample& s, const std::function<double(double)>& F0);

/// Asymptotic Kolmogorov tail probability Q(sqrt(n) d) with
/// Q(t) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2), terms truncated below
/// 1e-12 and the result clamped to [0, 1].
double ks_pvalue_asymptotic(double d, int n);

/// Exact finite-n tail probability P(D_n >= d) via the Marsaglia-Tsang-Wang
/// matrix-power evaluation of Kolmogorov's distribution.
double ks_pvalue_exact(double d, int n);

/// P(D_n >= d): exact for n <= 140 (the exact evaluation is O(log n (nd)^3)
/// and both case-study sample sizes fall in this range), asymptotic beyond.
double ks_pvalue(double d, int n);

struct ComparisonOptions {
  /// Replace the plug-in p-value with a Lilliefors-style parametric
  /// bootstrap (sample from the fitted model, refit, tabulate D*).
  bool bootstrap_pvalue = false;
  int bootstrap_replications = 1000;
  std::uint64_t seed = 0x5eedc0de;
};

/// Fits every requested family, computes -2LL / AIC / BIC / AICc and the KS
/// statistic with p-value against the fitted cdf, and returns the reports
/// sorted by AIC ascending (ties: KS ascending). Per-family fit failures are
/// recorded in the report, not raised; failed rows sort last.
std::vector<GofReport> model_comparison(const Sample& s,
                                        std::span<const Family> families,
                                        const ComparisonOptions& opt = {});

/// The fitted cdf belonging to one comparison row.
std::function<double(double)> fitted_cdf(Family family,
                                         std::span<const double> estimates);

}  // namespace cel

#endif  // CEL_GOF_HPP
