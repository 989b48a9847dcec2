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

#include "cel/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cel/numerics.hpp"

namespace cel {

double cel_log_likelihood(const Theta& theta, const Sample& s) {
  const double th = theta.value();
  const double n = static_cast<double>(s.size());
  double sum = 0.0;
  for (double x : s.values()) {
    sum += std::log(x + th + 2.0) - 3.0 * std::log(x + th);
  }
  return 2.0 * n * std::log(th) - n * std::log1p(th) + sum;
}

double cel_score(const Theta& theta, const Sample& s) {
  const double th = theta.value();
  const double n = static_cast<double>(s.size());
  double sum = 0.0;
  for (double x : s.values()) {
    sum += 1.0 / (x + th + 2.0) - 3.0 / (x + th);
  }
  return 2.0 * n / th - n / (th + 1.0) + sum;
}

double cel_observed_information(const Theta& theta, const Sample& s) {
  const double th = theta.value();
  const double n = static_cast<double>(s.size());
  double sum = 0.0;
  for (double x : s.values()) {
    const double a = x + th;
    const double b = x + th + 2.0;
    sum += 3.0 / (a * a) - 1.0 / (b * b);
  }
  return 2.0 * n / (th * th) - n / ((th + 1.0) * (th + 1.0)) - sum;
}

FitResult fit_cel(const Sample& s, const CelFitOptions& opt) {
  if (!(opt.alpha > 0.0 && opt.alpha < 1.0)) {
    throw std::domain_error("fit_cel: alpha must lie in (0, 1)");
  }
  auto score = [&s](double th) { return cel_score(Theta(th), s); };

  // Bracket the root on a geometric grid around the sample median. The score
  // goes to +inf as theta -> 0+, so only the +/- sign change matters.
  const double center = s.median();
  const double lo_bound = 1e-3 * center;
  const double hi_bound = 1e3 * center;
  constexpr int kPointsPerDecade = 8;
  const int steps =
      static_cast<int>(std::ceil(kPointsPerDecade *
                                 std::log10(hi_bound / lo_bound)));
  double lo = lo_bound;
  double flo = score(lo);
  double hi = lo;
  bool bracketed = false;
  for (int i = 1; i <= steps; ++i) {
    hi = lo_bound * std::pow(hi_bound / lo_bound,
                             static_cast<double>(i) / steps);
    const double fhi = score(hi);
    if (flo > 0.0 && fhi <= 0.0) {
      bracketed = true;
      break;
    }
    lo = hi;
    flo = fhi;
  }
  if (!bracketed) {
    throw ConvergenceError(
        "fit_cel: score has no sign change on the search window [" +
        std::to_string(lo_bound) + ", " + std::to_string(hi_bound) + "]");
  }

  auto score_derivative = [&s](double th) {
    return -cel_observed_information(Theta(th), s);
  };
  RootOptions ropt;
  ropt.tol = opt.tol;
  ropt.max_iterations = opt.max_iterations;
  const RootResult root = find_root(score, score_derivative, lo, hi, ropt);
  if (!root.converged) {
    throw ConvergenceError(
        "fit_cel: root solve stalled after " + std::to_string(root.iterations) +
        " iterations (theta=" + std::to_string(root.root) +
        ", score=" + std::to_string(root.residual) + ")");
  }

  FitResult result;
  result.family = Family::CEL;
  result.estimates = {root.root};
  result.log_likelihood = cel_log_likelihood(Theta(root.root), s);
  result.iterations = root.iterations;
  result.converged = true;
  const double info = cel_observed_information(Theta(root.root), s);
  if (info > 0.0) {
    const double se = 1.0 / std::sqrt(info);
    const double z = normal_quantile(1.0 - 0.5 * opt.alpha);
    result.std_error = se;
    result.ci_lower = root.root - z * se;
    result.ci_upper = root.root + z * se;
  } else {
    result.degenerate_information = true;
  }
  return result;
}

namespace {

// Transformed (unconstrained) competitor parameter space: log for positive
// parameters, logit for EL's p in (0, 1).
double to_natural_p2(Family family, double v) {
  return family == Family::EL ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v);
}

double from_natural_p2(Family family, double p2) {
  return family == Family::EL ? std::log(p2 / (1.0 - p2)) : std::log(p2);
}

// Method-of-moments style starting values.
std::vector<double> starting_point(Family family, const Sample& s) {
  const double mean = s.mean();
  const double rate = 1.0 / mean;
  switch (family) {
    case Family::EPL:
      return {std::log(rate), from_natural_p2(family, 1.0)};
    case Family::EP:
      return {std::log(rate), from_natural_p2(family, 1.0)};
    case Family::EL:
      return {std::log(rate), from_natural_p2(family, 0.5)};
    case Family::WEIBULL: {
      // Shape from the log-sample spread: Var(log X) = pi^2 / (6 a^2).
      double lsum = 0.0, lsum2 = 0.0;
      for (double x : s.values()) {
        const double l = std::log(x);
        lsum += l;
        lsum2 += l * l;
      }
      const double n = static_cast<double>(s.size());
      const double lvar = std::max(1e-12, lsum2 / n - (lsum / n) * (lsum / n));
      const double a = std::clamp(1.2825 / std::sqrt(lvar), 0.05, 50.0);
      constexpr double kEulerGamma = 0.57721566490153286;
      const double b = std::exp(-(lsum / n + kEulerGamma / a));
      return {std::log(b), std::log(a)};
    }
    case Family::GAMMA: {
      double sum = 0.0, sum2 = 0.0;
      for (double x : s.values()) {
        sum += x;
        sum2 += x * x;
      }
      const double n = static_cast<double>(s.size());
      const double var = std::max(1e-12, sum2 / n - mean * mean);
      const double a = std::clamp(mean * mean / var, 0.05, 50.0);
      return {std::log(a / mean), std::log(a)};
    }
    case Family::CEL:
      break;
  }
  throw std::domain_error("starting_point: invalid family");
}

}  // namespace

FitResult fit_competitor(Family family, const Sample& s,
                         const CompetitorFitOptions& opt) {
  if (family == Family::CEL) {
    throw std::domain_error(
        "fit_competitor: use fit_cel for the CEL distribution");
  }
  auto objective = [&](const std::vector<double>& v) {
    const double p1 = std::exp(v[0]);
    const double p2 = to_natural_p2(family, v[1]);
    if (!std::isfinite(p1) || !std::isfinite(p2) || p1 <= 0.0 || p2 <= 0.0 ||
        (family == Family::EL && p2 >= 1.0)) {
      return std::numeric_limits<double>::max();
    }
    const double ll = comp_log_likelihood(CompetitorParams(family, p1, p2), s);
    return std::isfinite(ll) ? -ll : std::numeric_limits<double>::max();
  };

  const std::vector<double> base = starting_point(family, s);
  // Deterministic multi-start guards against local optima and NM stalls.
  const double offsets[4][2] = {
      {0.0, 0.0}, {0.5, 0.5}, {-0.5, 0.5}, {0.5, -0.5}};
  SimplexOptions sopt;
  sopt.tol = opt.tol;
  sopt.max_iterations = opt.max_iterations;
  SimplexResult best;
  best.min_value = std::numeric_limits<double>::max();
  int total_iterations = 0;
  bool any_converged = false;
  for (const auto& off : offsets) {
    std::vector<double> start = {base[0] + off[0], base[1] + off[1]};
    SimplexResult r = nelder_mead(objective, start, sopt);
    // Re-running from the candidate optimum costs little and recovers the
    // occasional premature simplex collapse.
    SimplexResult polished = nelder_mead(objective, r.argmin, sopt);
    if (polished.min_value < r.min_value) {
      polished.iterations += r.iterations;
      r = polished;
    }
    total_iterations += r.iterations;
    any_converged = any_converged || r.converged;
    if (r.min_value < best.min_value) {
      best = r;
    }
  }
  if (!any_converged || !std::isfinite(best.min_value) ||
      best.min_value == std::numeric_limits<double>::max()) {
    throw ConvergenceError("fit_competitor: optimizer failed for family " +
                           std::string(family_name(family)));
  }

  FitResult result;
  result.family = family;
  result.estimates = {std::exp(best.argmin[0]),
                      to_natural_p2(family, best.argmin[1])};
  result.log_likelihood = -best.min_value;
  result.iterations = total_iterations;
  result.converged = true;
  return result;
}

}  // namespace cel
