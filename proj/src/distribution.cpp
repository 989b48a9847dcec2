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

#include "cel/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace cel {

namespace {

void check_support(double x, const char* op) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error(std::string(op) +
                            ": argument must be finite and >= 0");
  }
}

}  // namespace

Theta::Theta(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::domain_error("Theta: value must be finite and > 0");
  }
}

double CelDistribution::pdf(double x) const {
  check_support(x, "pdf");
  const double th = theta_.value();
  const double y = x + th;
  return th * th / (th + 1.0) * (y + 2.0) / (y * y * y);
}

double CelDistribution::log_pdf(double x) const {
  check_support(x, "log_pdf");
  const double th = theta_.value();
  return 2.0 * std::log(th) - std::log1p(th) + std::log(x + th + 2.0) -
         3.0 * std::log(x + th);
}

double CelDistribution::cdf(double x) const {
  check_support(x, "cdf");
  const double th = theta_.value();
  const double y = x + th;
  if (y > 1e100) {
    return 1.0 - survival(x);
  }
  return x * (x * (th + 1.0) + th * (th + 2.0)) / ((th + 1.0) * y * y);
}

double CelDistribution::survival(double x) const {
  check_support(x, "survival");
  const double th = theta_.value();
  const double y = x + th;
  if (y > 1e100) {
    // Factored so y^2 never overflows.
    return th * th / ((th + 1.0) * y) * ((y + 1.0) / y);
  }
  return th * th * (y + 1.0) / ((th + 1.0) * y * y);
}

double CelDistribution::hazard(double x) const {
  check_support(x, "hazard");
  const double y = x + theta_.value();
  return (y + 2.0) / (y * (y + 1.0));
}

double CelDistribution::cumulative_hazard(double t) const {
  check_support(t, "cumulative_hazard");
  const double th = theta_.value();
  // -log survival(t), written to stay exact at t = 0.
  return 2.0 * std::log1p(t / th) - std::log1p(t / (th + 1.0));
}

double CelDistribution::glaser_eta(double t) const {
  check_support(t, "glaser_eta");
  const double y = t + theta_.value();
  return 2.0 * (y + 3.0) / (y * (y + 2.0));
}

double CelDistribution::quantile(double u) const {
  if (!std::isfinite(u) || u < 0.0 || u >= 1.0) {
    throw std::domain_error("quantile: u must lie in [0, 1)");
  }
  const double th = theta_.value();
  // Root branch of z^2 - (theta+2) z + u (theta+1) = 0 with z = x/(x+theta)
  // in [0, 1). Both catastrophic cancellations (u -> 0 and u -> 1) are
  // removed by multiplying through with the conjugates:
  //   theta+2-sqrt(D) = 4 u (theta+1) / (theta+2+sqrt(D)),
  //   sqrt(D)-theta   = 4 (theta+1)(1-u) / (sqrt(D)+theta).
  const double disc = (th + 2.0) * (th + 2.0) - 4.0 * u * (th + 1.0);
  const double root = std::sqrt(disc);
  return th * u * (th + root) / ((1.0 - u) * (th + 2.0 + root));
}

double CelDistribution::median() const { return quantile(0.5); }

}  // namespace cel
