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

#include "cel/properties.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cel/numerics.hpp"

namespace cel {

EntropyOrder::EntropyOrder(double eta) : eta_(eta) {
  if (!std::isfinite(eta) || eta <= 0.0 || eta == 1.0) {
    throw std::domain_error("EntropyOrder: order must be > 0 and != 1");
  }
}

OrderStatSpec::OrderStatSpec(int r_, int m_) : r(r_), m(m_) {
  if (r < 1 || m < 1 || r > m) {
    throw std::domain_error("OrderStatSpec: require 1 <= r <= m");
  }
}

double fractional_moment(const CelDistribution& d, double r) {
  if (!std::isfinite(r)) {
    throw std::domain_error("fractional_moment: r must be finite");
  }
  if (r >= 1.0) {
    throw std::domain_error(
        "fractional_moment: moment does not exist for r >= 1");
  }
  if (r <= -1.0) {
    throw std::domain_error(
        "fractional_moment: moment does not exist for r <= -1");
  }
  const double th = d.theta();
  return std::pow(th, r + 1.0) / (th + 1.0) *
         (beta_fn(r + 1.0, 1.0 - r) + 2.0 / th * beta_fn(r + 1.0, 2.0 - r));
}

double truncated_mean(const CelDistribution& d, double limit) {
  if (!std::isfinite(limit) || limit <= 0.0) {
    throw std::domain_error("truncated_mean: limit must be finite and > 0");
  }
  auto integrand = [&d](double x) { return x * d.pdf(x); };
  QuadratureOptions opt;
  opt.abs_tol = 1e-10;
  opt.rel_tol = 1e-10;
  return integrate(integrand, 0.0, limit, opt).value;
}

namespace {

// int_0^inf pdf^eta dx, finite exactly when eta > 1/2. Substituting
// s = 1/(x + theta) turns the tail into an endpoint power s^{2 eta - 2}
// whose leading (possibly singular) part integrates in closed form:
//   int pdf^eta = (theta^2/(theta+1))^eta *
//     [ theta^{1-2 eta}/(2 eta - 1) + int_0^{1/theta} ((1+2s)^eta - 1)
//       s^{2 eta - 2} ds ]
// and the remaining integrand is continuous with value 0 at s = 0.
double pdf_power_integral(double theta, double eta) {
  if (eta <= 0.5) {
    throw std::domain_error(
        "entropy: integral of pdf^order diverges for order <= 1/2");
  }
  auto integrand = [eta](double s) {
    if (s <= 0.0) {
      return 0.0;
    }
    return std::expm1(eta * std::log1p(2.0 * s)) * std::pow(s, 2.0 * eta - 2.0);
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-12;
  const double tail = std::pow(theta, 1.0 - 2.0 * eta) / (2.0 * eta - 1.0);
  const double rest = integrate(integrand, 0.0, 1.0 / theta, opt).value;
  return std::pow(theta * theta / (theta + 1.0), eta) * (tail + rest);
}

}  // namespace

double renyi_entropy(const CelDistribution& d, const EntropyOrder& order) {
  const double eta = order.value();
  return std::log(pdf_power_integral(d.theta(), eta)) / (1.0 - eta);
}

double tsallis_entropy(const CelDistribution& d, const EntropyOrder& order) {
  const double lambda = order.value();
  return (1.0 - pdf_power_integral(d.theta(), lambda)) / (1.0 - lambda);
}

namespace {

// Sum of the alternating panel series s[0] + s[1] + ... by the Euler
// transformation: repeated pairwise averaging of the partial sums.
double euler_sum(std::vector<double> partial_sums) {
  while (partial_sums.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial_sums.size(); ++i) {
      partial_sums[i] = 0.5 * (partial_sums[i] + partial_sums[i + 1]);
    }
    partial_sums.pop_back();
  }
  return partial_sums[0];
}

// Integral over [0, inf) of osc(t x) * pdf(x) where osc is cos or sin:
// integrate between consecutive zeros of the trigonometric factor and
// Euler-accelerate the resulting alternating series (pdf is positive and
// strictly decreasing, so panels alternate once oscillation sets in).
double oscillatory_component(const CelDistribution& d, double t, bool cosine) {
  constexpr int kPanels = 48;
  QuadratureOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-12;
  opt.max_evaluations = 100000;
  auto integrand = [&](double x) {
    return (cosine ? std::cos(t * x) : std::sin(t * x)) * d.pdf(x);
  };
  auto zero_at = [&](int j) {
    return cosine ? (j - 0.5) * M_PI / t : j * M_PI / t;
  };
  // Panel 0 runs from x=0 to the first zero of the oscillating factor.
  double head = integrate(integrand, 0.0, zero_at(1), opt).value;
  std::vector<double> partial_sums;
  partial_sums.reserve(kPanels);
  double sum = head;
  for (int j = 1; j <= kPanels; ++j) {
    sum += integrate(integrand, zero_at(j), zero_at(j + 1), opt).value;
    partial_sums.push_back(sum);
  }
  return euler_sum(std::move(partial_sums));
}

}  // namespace

std::complex<double> char_fn(const CelDistribution& d, double t) {
  if (!std::isfinite(t)) {
    throw std::domain_error("char_fn: t must be finite");
  }
  if (std::fabs(t) > 100.0) {
    throw ConvergenceError("char_fn: |t| beyond the supported range (100)");
  }
  if (t == 0.0) {
    return {1.0, 0.0};
  }
  if (t < 0.0) {
    return std::conj(char_fn(d, -t));
  }
  return {oscillatory_component(d, t, true),
          oscillatory_component(d, t, false)};
}

double bowley_skewness(const CelDistribution& d) {
  const double q1 = d.quantile(0.25);
  const double q2 = d.quantile(0.5);
  const double q3 = d.quantile(0.75);
  return (q3 - 2.0 * q2 + q1) / (q3 - q1);
}

double moors_kurtosis(const CelDistribution& d) {
  const double o1 = d.quantile(1.0 / 8.0);
  const double o2 = d.quantile(2.0 / 8.0);
  const double o3 = d.quantile(3.0 / 8.0);
  const double o5 = d.quantile(5.0 / 8.0);
  const double o6 = d.quantile(6.0 / 8.0);
  const double o7 = d.quantile(7.0 / 8.0);
  return (o7 - o5 - o3 + o1) / (o6 - o2);
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / i;
  }
  return c;
}

}  // namespace

double order_stat_pdf(const CelDistribution& d, const OrderStatSpec& spec,
                      double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("order_stat_pdf: x must be finite and >= 0");
  }
  const double g = d.pdf(x);
  const double G = d.cdf(x);
  const double S = d.survival(x);
  const double coeff = std::exp(log_gamma(spec.m + 1.0) - log_gamma(spec.r) -
                                log_gamma(spec.m - spec.r + 1.0));
  return coeff * std::pow(G, spec.r - 1) * std::pow(S, spec.m - spec.r) * g;
}

double order_stat_pdf_series(const CelDistribution& d,
                             const OrderStatSpec& spec, double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("order_stat_pdf_series: x must be finite and >= 0");
  }
  const double th = d.theta();
  const int r = spec.r;
  const int m = spec.m;
  const double z = std::exp(log_gamma(m + 1.0) - log_gamma(r) -
                            log_gamma(m - r + 1.0));
  const double ratio = th * th / (th + 1.0);
  double sum = 0.0;
  for (int l = 0; l <= m - r; ++l) {
    for (int k = 0; k <= r + l - 1; ++k) {
      const double c_lk = (l % 2 == 0 ? 1.0 : -1.0) *
                          std::pow(ratio, k + 1) *
                          std::pow((th + 2.0) / th, k);
      sum += binomial(m - r, l) * binomial(r + l - 1, k) * c_lk *
             std::pow(x, 2 * r + 2 * l - k - 2) * (x + th + 2.0) /
             std::pow(x + th, 2 * r + 2 * l + 1);
    }
  }
  return z * sum;
}

bool lr_ordering_check(const Theta& theta1, const Theta& theta2,
                       std::span<const double> grid) {
  if (theta1.value() <= theta2.value()) {
    throw std::domain_error("lr_ordering_check: require theta1 > theta2");
  }
  if (grid.size() < 2) {
    throw std::domain_error("lr_ordering_check: grid needs >= 2 points");
  }
  const CelDistribution smaller(theta2);
  const CelDistribution larger(theta1);
  double prev_log_ratio = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw std::domain_error(
          "lr_ordering_check: grid must be positive and strictly ascending");
    }
    const double log_ratio =
        smaller.log_pdf(grid[i]) - larger.log_pdf(grid[i]);
    if (i > 0 && log_ratio >= prev_log_ratio) {
      return false;
    }
    prev_log_ratio = log_ratio;
  }
  return true;
}

}  // namespace cel
