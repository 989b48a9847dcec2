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

#ifndef CEL_DISTRIBUTION_HPP
#define CEL_DISTRIBUTION_HPP

namespace cel {

/// The single CEL parameter, theta > 0 (same units as the observed times).
/// Construction rejects non-positive and non-finite values.
class Theta {
 public:
  explicit Theta(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// The compounded exponential-Lindley distribution CEL(theta): an
/// exponential rate mixed over a Lindley law, giving the one-parameter
/// heavy-tailed density
///
///   g(x) = theta^2 / (theta + 1) * (x + theta + 2) / (x + theta)^3,  x >= 0.
///
/// The hazard is strictly decreasing for every theta and the tail decays
/// like x^-2, so no integer moment exists. Immutable and safe for
/// unrestricted concurrent use.
class CelDistribution {
 public:
  explicit CelDistribution(Theta theta) : theta_(theta) {}
  explicit CelDistribution(double theta) : theta_(Theta(theta)) {}

  double theta() const { return theta_.value(); }

  /// Density; finite at x = 0 with value (theta+2) / [theta (theta+1)].
  double pdf(double x) const;
  double log_pdf(double x) const;

  /// Distribution function x [x (theta+1) + theta (theta+2)] /
  /// [(theta+1) (x+theta)^2], in [0, 1).
  double cdf(double x) const;

  /// survival(x) = 1 - cdf(x) = theta^2 (x+theta+1) / [(theta+1)(x+theta)^2].
  double survival(double x) const;

  /// hazard(x) = pdf/survival = (x+theta+2) / [(x+theta)(x+theta+1)],
  /// strictly decreasing in x.
  double hazard(double x) const;

  /// Integrated hazard H(t) = -log survival(t).
  double cumulative_hazard(double t) const;

  /// Glaser's shape function eta(t) = -pdf'(t)/pdf(t)
  ///   = 2 (t + theta + 3) / [(t + theta)(t + theta + 2)],
  /// strictly decreasing, which classifies the hazard as DFR.
  double glaser_eta(double t) const;

  /// Closed-form inverse cdf on [0, 1); quantile(0) = 0.
  double quantile(double u) const;

  /// quantile(1/2).
  double median() const;

 private:
  Theta theta_;
};

}  // namespace cel

#endif  // CEL_DISTRIBUTION_HPP
