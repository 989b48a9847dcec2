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

#ifndef CEL_PROPERTIES_HPP
#define CEL_PROPERTIES_HPP

#include <complex>
#include <span>

#include "cel/distribution.hpp"

namespace cel {

/// Entropy order (Renyi's eta / Tsallis' lambda): positive and != 1.
class EntropyOrder {
 public:
  explicit EntropyOrder(double eta);
  double value() const { return eta_; }

 private:
  double eta_;
};

/// Rank r of m for an order statistic, 1 <= r <= m.
struct OrderStatSpec {
  OrderStatSpec(int r, int m);
  int r;
  int m;
};

/// E[X^r] for -1 < r < 1 via the Beta-integral closed form
///   theta^{r+1}/(theta+1) [B(r+1, 1-r) + (2/theta) B(r+1, 2-r)].
/// For r >= 1 the moment does not exist (the tail is x^-2) and a domain
/// error says so; same for r <= -1 where the origin mass diverges.
double fractional_moment(const CelDistribution& d, double r);

/// Integral of x pdf(x) over [0, M] by quadrature. Grows without bound as
/// M -> inf, like (theta^2/(theta+1)) log M; exhibits the missing mean.
double truncated_mean(const CelDistribution& d, double limit);

/// Characteristic function E[e^{itX}] by oscillation-aware quadrature:
/// half-period panels between consecutive zeros of the trigonometric factor,
/// summed with Euler acceleration of the alternating panel series.
/// Supported for |t| <= 100.
std::complex<double> char_fn(const CelDistribution& d, double t);

/// Renyi entropy (1-eta)^{-1} log int pdf^eta. The integral only converges
/// for eta > 1/2 (tail pdf^eta ~ x^{-2 eta}); smaller orders raise a domain
/// error.
double renyi_entropy(const CelDistribution& d, const EntropyOrder& order);

/// Tsallis entropy (1-lambda)^{-1} [1 - int pdf^lambda], same domain
/// restriction as renyi_entropy.
double tsallis_entropy(const CelDistribution& d, const EntropyOrder& order);

/// Quartile-based skewness [Q(3/4) - 2 Q(1/2) + Q(1/4)] / [Q(3/4) - Q(1/4)].
double bowley_skewness(const CelDistribution& d);

/// Octile-based kurtosis
/// [Q(7/8) - Q(5/8) - Q(3/8) + Q(1/8)] / [Q(6/8) - Q(1/8)].
double moors_kurtosis(const CelDistribution& d);

/// Density of the r-th of m order statistics, exact Beta form
///   m! / [(r-1)! (m-r)!] G^{r-1} (1-G)^{m-r} g.
double order_stat_pdf(const CelDistribution& d, const OrderStatSpec& spec,
                      double x);

/// The same density through the expanded binomial double series; a
/// cross-check evaluator for small (r, m) where the expansion is exact.
double order_stat_pdf_series(const CelDistribution& d,
                             const OrderStatSpec& spec, double x);

/// Verifies the likelihood-ratio ordering of the family on a grid:
/// for theta1 > theta2 (required), CEL(theta1) dominates CEL(theta2) in the
/// lr sense, i.e. pdf(.; theta2)/pdf(.; theta1) is strictly decreasing.
/// Returns true iff that monotonicity holds across the grid (adjacent
/// pairwise comparison). Larger theta shifts the distribution up, so the
/// smaller-theta density is the lr-smaller one.
bool lr_ordering_check(const Theta& theta1, const Theta& theta2,
                       std::span<const double> grid);

}  // namespace cel

#endif  // CEL_PROPERTIES_HPP
