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

#ifndef CEL_FITTING_HPP
#define CEL_FITTING_HPP

#include <optional>
#include <vector>

#include "cel/competitors.hpp"
#include "cel/distribution.hpp"
#include "cel/sample.hpp"

namespace cel {

struct FitResult {
  Family family = Family::CEL;
  std::vector<double> estimates;
  std::optional<double> std_error;  // CEL only, omitted on degenerate info
  std::optional<double> ci_lower;
  std::optional<double> ci_upper;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
  bool degenerate_information = false;
};

/// log L(theta) = 2n log(theta) - n log(theta+1)
///              + sum_i [log(x_i + theta + 2) - 3 log(x_i + theta)].
double cel_log_likelihood(const Theta& theta, const Sample& s);

/// d/dtheta of the log-likelihood:
/// 2n/theta - n/(theta+1) + sum_i [1/(x_i+theta+2) - 3/(x_i+theta)].
double cel_score(const Theta& theta, const Sample& s);

/// Observed information -d^2/dtheta^2 log L =
/// 2n/theta^2 - n/(theta+1)^2 - sum_i [3/(x_i+theta)^2 - 1/(x_i+theta+2)^2].
double cel_observed_information(const Theta& theta, const Sample& s);

struct CelFitOptions {
  double tol = 1e-10;   // on |score|
  double alpha = 0.05;  // two-sided CI level 100(1-alpha)%
  int max_iterations = 200;
};

/// Maximum-likelihood fit of CEL(theta). The score is bracketed by scanning
/// a geometric grid around the sample median (the score tends to +inf at 0+
/// and to 0- at infinity), then solved with safeguarded Newton. The standard
/// error is 1/sqrt(observed information); when the information at the root
/// is not positive the CI is omitted and degenerate_information is set.
/// Throws ConvergenceError when no sign change is found or the root solve
/// stalls.
FitResult fit_cel(const Sample& s, const CelFitOptions& opt = {});

struct CompetitorFitOptions {
  double tol = 1e-9;
  int max_iterations = 2000;
};

/// Maximum-likelihood fit of a two-parameter competitor by Nelder-Mead in a
/// log-transformed (EL: log/logit) parameter space, with a few deterministic
/// restarts; estimates are returned on the natural scale.
FitResult fit_competitor(Family family, const Sample& s,
                         const CompetitorFitOptions& opt = {});

}  // namespace cel

#endif  // CEL_FITTING_HPP
