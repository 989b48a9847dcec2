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

#ifndef CEL_COMPETITORS_HPP
#define CEL_COMPETITORS_HPP

#include <string>

#include "cel/sample.hpp"

namespace cel {

/// Model families handled by the fitting and comparison machinery.
/// All but CEL are the two-parameter decreasing-failure-rate competitors.
enum class Family { CEL, EPL, EP, EL, WEIBULL, GAMMA };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // case-insensitive

/// Parameters of a two-parameter competitor. The family-specific meaning is
///   EPL (beta, theta), EP (beta, lambda), EL (beta, p),
///   Weibull (beta, alpha), Gamma (beta, alpha)
/// with beta rate-like and alpha a shape. All parameters must be positive;
/// EL additionally requires p in (0, 1).
struct CompetitorParams {
  CompetitorParams(Family family, double p1, double p2);

  Family family;
  double p1;
  double p2;
};

/// Density at x > 0.
double comp_pdf(const CompetitorParams& c, double x);

/// log comp_pdf, evaluated in log space so large x underflows gracefully
/// to -inf instead of taking log(0).
double comp_log_pdf(const CompetitorParams& c, double x);

/// Distribution function at x >= 0. Weibull, Gamma, and EL use standard
/// closed forms; EP and EPL use closed forms obtained by integrating the
/// density (checked against quadrature in the tests).
double comp_cdf(const CompetitorParams& c, double x);

/// Sum of comp_log_pdf over the sample; -inf when any term underflows,
/// which optimizers treat as a rejected point.
double comp_log_likelihood(const CompetitorParams& c, const Sample& s);

}  // namespace cel

#endif  // CEL_COMPETITORS_HPP
