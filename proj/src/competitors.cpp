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

#include "cel/competitors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cel/numerics.hpp"

namespace cel {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_x_positive(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("comp_pdf: x must be finite and > 0");
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::CEL: return "cel";
    case Family::EPL: return "epl";
    case Family::EP: return "ep";
    case Family::EL: return "el";
    case Family::WEIBULL: return "weibull";
    case Family::GAMMA: return "gamma";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "cel") return Family::CEL;
  if (s == "epl") return Family::EPL;
  if (s == "ep") return Family::EP;
  if (s == "el") return Family::EL;
  if (s == "weibull") return Family::WEIBULL;
  if (s == "gamma") return Family::GAMMA;
  throw std::domain_error("unknown distribution family: " + name);
}

CompetitorParams::CompetitorParams(Family family_, double p1_, double p2_)
    : family(family_), p1(p1_), p2(p2_) {
  if (family == Family::CEL) {
    throw std::domain_error(
        "CompetitorParams: CEL is not a two-parameter competitor");
  }
  if (!std::isfinite(p1) || !std::isfinite(p2) || p1 <= 0.0 || p2 <= 0.0) {
    throw std::domain_error(
        "CompetitorParams: parameters must be finite and > 0");
  }
  if (family == Family::EL && p2 >= 1.0) {
    throw std::domain_error("CompetitorParams: EL requires p in (0, 1)");
  }
}

double comp_log_pdf(const CompetitorParams& c, double x) {
  check_x_positive(x);
  const double b = c.p1;
  switch (c.family) {
    case Family::EPL: {
      // f = b t^2 (1+t)^2 e^{-bx} (3 + t - e^{-bx}) /
      //     [(1 + 3t + t^2) (1 + t - e^{-bx})^3]
      const double t = c.p2;
      const double w = std::exp(-b * x);
      return std::log(b) + 2.0 * std::log(t) + 2.0 * std::log1p(t) - b * x +
             std::log(3.0 + t - w) - std::log(1.0 + 3.0 * t + t * t) -
             3.0 * std::log(1.0 + t - w);
    }
    case Family::EP: {
      // f = lam b e^{-lam - bx + lam e^{-bx}} / (1 - e^{-lam})
      const double lam = c.p2;
      return std::log(lam) + std::log(b) - std::log(-std::expm1(-lam)) - lam -
             b * x + lam * std::exp(-b * x);
    }
    case Family::EL: {
      // f = b (1-p) e^{-bx} / [(-log p) (1 - (1-p) e^{-bx})]
      const double p = c.p2;
      return std::log(b) + std::log1p(-p) - b * x -
             std::log(-std::log(p)) - std::log1p(-(1.0 - p) * std::exp(-b * x));
    }
    case Family::WEIBULL: {
      // f = a b^a x^{a-1} e^{-(bx)^a}
      const double a = c.p2;
      return std::log(a) + a * std::log(b) + (a - 1.0) * std::log(x) -
             std::pow(b * x, a);
    }
    case Family::GAMMA: {
      // f = b^a x^{a-1} e^{-bx} / Gamma(a), rate parametrization
      const double a = c.p2;
      return a * std::log(b) + (a - 1.0) * std::log(x) - b * x - log_gamma(a);
    }
    case Family::CEL:
      break;
  }
  throw std::domain_error("comp_log_pdf: invalid family");
}

double comp_pdf(const CompetitorParams& c, double x) {
  return std::exp(comp_log_pdf(c, x));
}

double comp_cdf(const CompetitorParams& c, double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("comp_cdf: x must be finite and >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  const double b = c.p1;
  switch (c.family) {
    case Family::EPL: {
      // Integrating the density with v = 1 + t - e^{-bx} gives
      // F = K [(1+t)/t^2 - (1+v)/v^2], K = t^2 (1+t)^2 / (1 + 3t + t^2).
      const double t = c.p2;
      const double v = 1.0 + t - std::exp(-b * x);
      const double k = t * t * (1.0 + t) * (1.0 + t) / (1.0 + 3.0 * t + t * t);
      const double f = k * ((1.0 + t) / (t * t) - (1.0 + v) / (v * v));
      return std::clamp(f, 0.0, 1.0);
    }
    case Family::EP: {
      // F = [1 - e^{-lam (1 - e^{-bx})}] / (1 - e^{-lam})
      const double lam = c.p2;
      const double f = std::expm1(lam * std::expm1(-b * x)) / std::expm1(-lam);
      return std::clamp(f, 0.0, 1.0);
    }
    case Family::EL: {
      const double p = c.p2;
      const double f =
          1.0 - std::log1p(-(1.0 - p) * std::exp(-b * x)) / std::log(p);
      return std::clamp(f, 0.0, 1.0);
    }
    case Family::WEIBULL:
      return -std::expm1(-std::pow(b * x, c.p2));
    case Family::GAMMA:
      return reg_inc_gamma(c.p2, b * x);
    case Family::CEL:
      break;
  }
  throw std::domain_error("comp_cdf: invalid family");
}

double comp_log_likelihood(const CompetitorParams& c, const Sample& s) {
  double sum = 0.0;
  for (double x : s.values()) {
    const double lp = comp_log_pdf(c, x);
    if (lp == kNegInf || std::isnan(lp)) {
      return kNegInf;
    }
    sum += lp;
  }
  return sum;
}

}  // namespace cel
