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

#include "cel/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace cel {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi) / 2

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

}  // namespace

double log_gamma(double z) {
  require_finite(z, "log_gamma: z");
  if (z <= 0.0) {
    throw std::domain_error("log_gamma: z must be > 0");
  }
  if (z == 1.0 || z == 2.0) {
    return 0.0;
  }
  // Shift small arguments into the range where the Lanczos sum is accurate.
  if (z < 0.5) {
    return log_gamma(z + 1.0) - std::log(z);
  }
  static const double coef[9] = {
      0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
  const double x = z - 1.0;
  double sum = coef[0];
  for (int i = 1; i < 9; ++i) {
    sum += coef[i] / (x + i);
  }
  const double base = x + 7.5;  // g + 1/2
  return kHalfLog2Pi + (x + 0.5) * std::log(base) - base + std::log(sum);
}

double beta_fn(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
    throw std::domain_error("beta_fn: a and b must be finite and > 0");
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

namespace {

// Series expansion of P(a, x), valid (fast) for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int n = 0; n < 10000; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) {
      return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
  }
  throw ConvergenceError("reg_inc_gamma: series did not converge");
}

// Continued fraction for Q(a, x) = 1 - P(a, x), valid for x >= a + 1
// (modified Lentz algorithm).
double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) {
      return h * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
  }
  throw ConvergenceError("reg_inc_gamma: continued fraction did not converge");
}

}  // namespace

double reg_inc_gamma(double a, double x) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw std::domain_error("reg_inc_gamma: a must be finite and > 0");
  }
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("reg_inc_gamma: x must be finite and >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (x < a + 1.0) {
    return gamma_p_series(a, x);
  }
  return 1.0 - gamma_q_contfrac(a, x);
}

double normal_quantile(double p) {
  // Wichura, Algorithm AS 241 (PPND16).
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
    throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  }
  const double q = p - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2509.0809287301226727 * r + 33430.575583588128105) * r +
                 67265.770927008700853) * r + 45921.953931549871457) * r +
               13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((5226.495278852545703 * r + 28729.085735721942674) * r +
                 39307.89580009271061) * r + 21213.794301586595867) * r +
               5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double v;
  if (r <= 5.0) {
    r -= 1.6;
    v = (((((((7.7454501427834140764e-4 * r + 0.0227238449892691845833) * r +
              0.24178072517745061177) * r + 1.27045825245236838258) * r +
            3.64784832476320460504) * r + 5.7694972214606914055) * r +
          4.6303378461565452959) * r + 1.42343711074968357734) /
        (((((((1.05075007164441684324e-9 * r + 5.475938084995344946e-4) * r +
              0.0151986665636164571966) * r + 0.14810397642748007459) * r +
            0.68976733498510000455) * r + 1.6763848301838038494) * r +
          2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              0.0012426609473880784386) * r + 0.026532189526576123093) * r +
            0.29656057182850489123) * r + 1.7848265399172913358) * r +
          5.4637849111641143699) * r + 6.6579046435011037772) /
        (((((((2.04426310338993978564e-15 * r + 1.4215117583164458887e-7) * r +
              1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
            0.0148753612908506148525) * r + 0.13692988092273580531) * r +
          0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -v : v;
}

namespace {

// 15-point Kronrod nodes on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss weights; constants from QUADPACK's dqk15.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Segment {
  double a, b;
  double value;
  double error;
};

struct SegmentWorse {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.error < y.error;
  }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);
  for (double v : fv) {
    if (std::isnan(v)) {
      throw std::domain_error("integrate: integrand evaluated to NaN");
    }
  }
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
  }
  for (int i = 0; i < 3; ++i) {
    const int j = 2 * i + 1;
    resg += kWg[i] * (fv[j] + fv[14 - j]);
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] *
              (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
  }
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return Segment{a, b, resk * half, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opt) {
  require_finite(a, "integrate: a");
  require_finite(b, "integrate: b");
  int evaluations = 15;
  Segment first = gk15(f, a, b);
  double total_value = first.value;
  double total_error = first.error;
  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> queue;
  queue.push(first);
  const double eps = std::numeric_limits<double>::epsilon();
  auto tolerance = [&] {
    return std::max(opt.abs_tol, opt.rel_tol * std::fabs(total_value));
  };
  while (total_error > tolerance()) {
    if (evaluations + 30 > opt.max_evaluations) {
      throw ConvergenceError(
          "integrate: error estimate " + std::to_string(total_error) +
          " did not meet tolerance within the evaluation budget");
    }
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b) ||
        (worst.b - worst.a) < eps * (std::fabs(worst.a) + std::fabs(worst.b))) {
      // Interval can no longer be split; the estimate is roundoff limited.
      throw ConvergenceError("integrate: interval subdivision exhausted before "
                             "reaching the requested tolerance");
    }
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    evaluations += 30;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  return QuadratureResult{total_value, total_error, evaluations};
}

QuadratureResult integrate_semi_infinite(
    const std::function<double(double)>& f, double lower,
    const QuadratureOptions& opt) {
  require_finite(lower, "integrate_semi_infinite: lower");
  // x = lower + t / (1 - t) maps [0, 1) onto [lower, inf); the Jacobian
  // 1 / (1 - t)^2 absorbs algebraic tails down to x^-2.
  auto transformed = [&f, lower](double t) {
    const double om = 1.0 - t;
    const double x = lower + t / om;
    if (!std::isfinite(x)) {
      return 0.0;
    }
    return f(x) / (om * om);
  };
  return integrate(transformed, 0.0, 1.0, opt);
}

RootResult find_root(const std::function<double(double)>& f,
                     const std::function<double(double)>& f_prime, double lo,
                     double hi, const RootOptions& opt) {
  require_finite(lo, "find_root: lo");
  require_finite(hi, "find_root: hi");
  if (lo > hi) {
    std::swap(lo, hi);
  }
  double flo = f(lo);
  double fhi = f(hi);
  int iterations = 2;
  if (flo == 0.0) {
    return RootResult{lo, iterations, 0.0, true};
  }
  if (fhi == 0.0) {
    return RootResult{hi, iterations, 0.0, true};
  }
  if (flo * fhi > 0.0) {
    throw std::domain_error("find_root: f(lo) and f(hi) have the same sign");
  }
  // Orient so that f(neg) < 0 < f(pos); the bracket invariant is maintained
  // throughout, so the result always lies inside [lo, hi].
  double neg = flo < 0.0 ? lo : hi;
  double pos = flo < 0.0 ? hi : lo;
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  ++iterations;
  double step = std::fabs(hi - lo);
  double step_prev = step;
  while (iterations < opt.max_iterations) {
    if (std::fabs(fx) <= opt.tol) {
      return RootResult{x, iterations, fx, true};
    }
    if (fx < 0.0) {
      neg = x;
    } else {
      pos = x;
    }
    bool bisect = true;
    if (f_prime) {
      const double d = f_prime(x);
      if (d != 0.0 && std::isfinite(d)) {
        const double newton = x - fx / d;
        const bool inside = (newton - neg) * (newton - pos) < 0.0;
        if (inside && std::fabs(newton - x) < 0.5 * step_prev) {
          step_prev = step;
          step = std::fabs(newton - x);
          x = newton;
          bisect = false;
        }
      }
    }
    if (bisect) {
      step_prev = step;
      x = 0.5 * (neg + pos);
      step = std::fabs(pos - neg) * 0.5;
    }
    fx = f(x);
    ++iterations;
    if (neg == pos || std::fabs(pos - neg) <
                          std::numeric_limits<double>::epsilon() *
                              (std::fabs(neg) + std::fabs(pos))) {
      // Bracket collapsed to machine precision.
      const bool ok = std::fabs(fx) <= opt.tol;
      return RootResult{x, iterations, fx, ok};
    }
  }
  return RootResult{x, iterations, fx, std::fabs(fx) <= opt.tol};
}

SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& start, const SimplexOptions& opt) {
  const size_t dim = start.size();
  if (dim == 0) {
    throw std::domain_error("nelder_mead: empty start vector");
  }
  const double f0 = f(start);
  if (!std::isfinite(f0)) {
    throw std::domain_error("nelder_mead: f(start) must be finite");
  }

  std::vector<std::vector<double>> verts(dim + 1, start);
  std::vector<double> fvals(dim + 1);
  fvals[0] = f0;
  for (size_t i = 0; i < dim; ++i) {
    double h = 0.05 * std::fabs(start[i]);
    if (h == 0.0) h = 0.1;
    verts[i + 1][i] += h;
    fvals[i + 1] = f(verts[i + 1]);
  }

  auto order = [&] {
    for (size_t i = 1; i <= dim; ++i) {
      auto v = verts[i];
      double fv = fvals[i];
      size_t j = i;
      while (j > 0 && fvals[j - 1] > fv) {
        verts[j] = verts[j - 1];
        fvals[j] = fvals[j - 1];
        --j;
      }
      verts[j] = v;
      fvals[j] = fv;
    }
  };
  order();

  int iterations = 0;
  while (iterations < opt.max_iterations) {
    double diameter = 0.0;
    for (size_t i = 1; i <= dim; ++i) {
      for (size_t k = 0; k < dim; ++k) {
        diameter = std::max(diameter, std::fabs(verts[i][k] - verts[0][k]));
      }
    }
    const double spread = fvals[dim] - fvals[0];
    if (diameter < opt.tol && spread < opt.tol) {
      return SimplexResult{verts[0], fvals[0], iterations, true};
    }
    ++iterations;

    std::vector<double> centroid(dim, 0.0);
    for (size_t i = 0; i < dim; ++i) {
      for (size_t k = 0; k < dim; ++k) {
        centroid[k] += verts[i][k];
      }
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](double coeff) {
      std::vector<double> p(dim);
      for (size_t k = 0; k < dim; ++k) {
        p[k] = centroid[k] + coeff * (verts[dim][k] - centroid[k]);
      }
      return p;
    };

    std::vector<double> reflected = blend(-1.0);
    double fr = f(reflected);
    if (fr < fvals[0]) {
      std::vector<double> expanded = blend(-2.0);
      double fe = f(expanded);
      if (fe < fr) {
        verts[dim] = std::move(expanded);
        fvals[dim] = fe;
      } else {
        verts[dim] = std::move(reflected);
        fvals[dim] = fr;
      }
    } else if (fr < fvals[dim - 1]) {
      verts[dim] = std::move(reflected);
      fvals[dim] = fr;
    } else {
      const bool outside = fr < fvals[dim];
      std::vector<double> contracted = blend(outside ? -0.5 : 0.5);
      double fc = f(contracted);
      if (fc < std::min(fr, fvals[dim])) {
        verts[dim] = std::move(contracted);
        fvals[dim] = fc;
      } else {
        // Shrink toward the best vertex.
        for (size_t i = 1; i <= dim; ++i) {
          for (size_t k = 0; k < dim; ++k) {
            verts[i][k] = verts[0][k] + 0.5 * (verts[i][k] - verts[0][k]);
          }
          fvals[i] = f(verts[i]);
        }
      }
    }
    order();
  }
  return SimplexResult{verts[0], fvals[0], iterations, false};
}

}  // namespace cel
