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

#include "cel/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cel/distribution.hpp"
#include "cel/fitting.hpp"
#include "cel/numerics.hpp"
#include "cel/simulation.hpp"

namespace cel {

double ecdf(const Sample& s, double x) {
  const auto values = s.values();
  const auto it = std::upper_bound(values.begin(), values.end(), x);
  return static_cast<double>(it - values.begin()) /
         static_cast<double>(values.size());
}

double ks_statistic(const Sample& s, const std::function<double(double)>& F0) {
  const auto values = s.values();
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = F0(values[i]);
    const double hi = static_cast<double>(i + 1) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max({d, hi, lo});
  }
  return d;
}

double ks_pvalue_asymptotic(double d, int n) {
  if (!std::isfinite(d) || d < 0.0 || n < 1) {
    throw std::domain_error("ks_pvalue: require d >= 0 and n >= 1");
  }
  const double t = std::sqrt(static_cast<double>(n)) * d;
  if (t == 0.0) {
    return 1.0;
  }
  double p;
  if (t < 1.18) {
    // Jacobi-theta form of the cdf; far better conditioned for small t than
    // the alternating tail series.
    const double v = M_PI * M_PI / (8.0 * t * t);
    double cdf = 0.0;
    for (int j = 1; j < 64; j += 2) {
      const double term = std::exp(-v * j * j);
      cdf += term;
      if (term < 1e-12) break;
    }
    cdf *= std::sqrt(2.0 * M_PI) / t;
    p = 1.0 - cdf;
  } else {
    p = 0.0;
    double sign = 1.0;
    for (int j = 1; j < 64; ++j) {
      const double term = std::exp(-2.0 * j * j * t * t);
      p += sign * 2.0 * term;
      if (term < 1e-12) break;
      sign = -sign;
    }
  }
  return std::clamp(p, 0.0, 1.0);
}

namespace {

// Marsaglia, Tsang & Wang's evaluation of P(D_n < d): the (2k-1)x(2k-1)
// matrix H raised to the n-th power by repeated squaring, with decimal
// rescaling to dodge overflow.
struct ScaledMatrix {
  std::vector<double> h;
  int m = 0;
  int exponent = 0;

  double& at(int i, int j) { return h[static_cast<std::size_t>(i) * m + j]; }
  double at(int i, int j) const {
    return h[static_cast<std::size_t>(i) * m + j];
  }
};

ScaledMatrix multiply(const ScaledMatrix& a, const ScaledMatrix& b) {
  const int m = a.m;
  ScaledMatrix c;
  c.m = m;
  c.h.assign(static_cast<std::size_t>(m) * m, 0.0);
  c.exponent = a.exponent + b.exponent;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < m; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  const int center = m / 2;
  if (c.at(center, center) > 1e140) {
    for (double& v : c.h) v *= 1e-140;
    c.exponent += 140;
  }
  return c;
}

ScaledMatrix matrix_power(const ScaledMatrix& a, int n) {
  if (n == 1) {
    return a;
  }
  ScaledMatrix half = matrix_power(a, n / 2);
  ScaledMatrix result = multiply(half, half);
  if (n % 2 == 1) {
    result = multiply(result, a);
  }
  return result;
}

}  // namespace

double ks_pvalue_exact(double d, int n) {
  if (!std::isfinite(d) || d < 0.0 || n < 1) {
    throw std::domain_error("ks_pvalue: require d >= 0 and n >= 1");
  }
  // D_n always lies in [1/(2n), 1].
  if (d * n <= 0.5) {
    return 1.0;
  }
  if (d >= 1.0) {
    return 0.0;
  }
  const int k = static_cast<int>(std::ceil(n * d));
  const double h = k - n * d;
  const int m = 2 * k - 1;

  ScaledMatrix H;
  H.m = m;
  H.h.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 >= 0) {
        H.at(i, j) = 1.0;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    H.at(i, 0) -= std::pow(h, i + 1);
    H.at(m - 1, i) -= std::pow(h, m - i);
  }
  H.at(m - 1, 0) += 2.0 * h - 1.0 > 0.0 ? std::pow(2.0 * h - 1.0, m) : 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 > 0) {
        for (int g = 1; g <= i - j + 1; ++g) {
          H.at(i, j) /= g;
        }
      }
    }
  }

  ScaledMatrix Hn = matrix_power(H, n);
  double s = Hn.at(k - 1, k - 1);
  int exponent = Hn.exponent;
  // s *= n! / n^n with the same decimal rescaling.
  for (int i = 1; i <= n; ++i) {
    s = s * i / n;
    if (s < 1e-140) {
      s *= 1e140;
      exponent -= 140;
    }
  }
  const double cdf = s * std::pow(10.0, exponent);
  return std::clamp(1.0 - cdf, 0.0, 1.0);
}

double ks_pvalue(double d, int n) {
  return n <= 140 ? ks_pvalue_exact(d, n) : ks_pvalue_asymptotic(d, n);
}

std::function<double(double)> fitted_cdf(Family family,
                                         std::span<const double> estimates) {
  if (family == Family::CEL) {
    const CelDistribution dist(estimates[0]);
    return [dist](double x) { return dist.cdf(x); };
  }
  const CompetitorParams params(family, estimates[0], estimates[1]);
  return [params](double x) { return comp_cdf(params, x); };
}

namespace {

// Generic inverse-transform draw from a fitted cdf by bisection; used only
// by the bootstrap, where per-draw cost is irrelevant.
double invert_cdf(const std::function<double(double)>& F, double u) {
  double hi = 1.0;
  while (F(hi) < u && hi < 1e300) {
    hi *= 2.0;
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (F(mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

FitResult fit_family(Family family, const Sample& s) {
  return family == Family::CEL ? fit_cel(s) : fit_competitor(family, s);
}

double bootstrap_pvalue(Family family, const Sample& s, double d_obs,
                        std::span<const double> estimates,
                        const ComparisonOptions& opt) {
  const std::size_t n = s.size();
  const auto F = fitted_cdf(family, estimates);
  int exceed = 0;
  int valid = 0;
  for (int b = 0; b < opt.bootstrap_replications; ++b) {
    SeededStream stream{opt.seed, static_cast<std::uint64_t>(b) + 1, 0};
    std::vector<double> draw(n);
    for (std::size_t i = 0; i < n; ++i) {
      draw[i] = invert_cdf(F, stream.next_open_unit());
    }
    try {
      Sample resample(std::move(draw), "bootstrap");
      const FitResult refit = fit_family(family, resample);
      const double d_star =
          ks_statistic(resample, fitted_cdf(family, refit.estimates));
      ++valid;
      if (d_star >= d_obs) {
        ++exceed;
      }
    } catch (const ConvergenceError&) {
      // Rare refit failure; excluded from the tabulation.
    } catch (const std::domain_error&) {
    }
  }
  if (valid == 0) {
    throw ConvergenceError("bootstrap_pvalue: all bootstrap refits failed");
  }
  return static_cast<double>(1 + exceed) / static_cast<double>(valid + 1);
}

}  // namespace

std::vector<GofReport> model_comparison(const Sample& s,
                                        std::span<const Family> families,
                                        const ComparisonOptions& opt) {
  std::vector<GofReport> reports;
  reports.reserve(families.size());
  const int n = static_cast<int>(s.size());
  for (Family family : families) {
    GofReport report;
    report.family = family;
    report.n = n;
    report.k = family == Family::CEL ? 1 : 2;
    try {
      const FitResult fit = fit_family(family, s);
      report.fit_ok = true;
      report.estimates = fit.estimates;
      report.neg2ll = -2.0 * fit.log_likelihood;
      report.aic = report.neg2ll + 2.0 * report.k;
      report.bic = report.neg2ll + report.k * std::log(n);
      report.aicc =
          n - report.k - 1 > 0
              ? report.aic + (2.0 * report.k * report.k + 2.0 * report.k) /
                                 (n - report.k - 1)
              : std::numeric_limits<double>::infinity();
      report.ks_stat = ks_statistic(s, fitted_cdf(family, fit.estimates));
      report.ks_pvalue =
          opt.bootstrap_pvalue
              ? bootstrap_pvalue(family, s, report.ks_stat, fit.estimates, opt)
              : ks_pvalue(report.ks_stat, n);
    } catch (const std::exception& e) {
      report.fit_ok = false;
      report.fail_reason = e.what();
    }
    reports.push_back(std::move(report));
  }
  std::sort(reports.begin(), reports.end(),
            [](const GofReport& a, const GofReport& b) {
              if (a.fit_ok != b.fit_ok) return a.fit_ok;
              if (a.aic != b.aic) return a.aic < b.aic;
              return a.ks_stat < b.ks_stat;
            });
  return reports;
}

}  // namespace cel
