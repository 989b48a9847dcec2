// Acceptance suite: each numbered criterion runs as `acceptance <k>` and
// prints a single PASS/FAIL line (plus indented detail for every check it
// performed). The process exit code reflects the criterion outcome.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "cel/competitors.hpp"
#include "cel/distribution.hpp"
#include "cel/fitting.hpp"
#include "cel/gof.hpp"
#include "cel/numerics.hpp"
#include "cel/properties.hpp"
#include "cel/sample.hpp"
#include "cel/simulation.hpp"
#include "oracles.hpp"

using namespace cel;

namespace {

int g_checks = 0;
int g_failed = 0;

void check(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failed;
  }
  std::printf("    %s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
}

void check_near(double got, double want, double tol, const std::string& what) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s: got %.10g, want %.10g +/- %.3g",
                what.c_str(), got, want, tol);
  check(std::fabs(got - want) <= tol, buf);
}

const Sample& dataset1() {
  static const Sample s = Sample::load(std::string(CEL_FIXTURES_DIR) +
                                       "/insulating_fluid_34kv.txt");
  return s;
}

const Sample& dataset2() {
  static const Sample s =
      Sample::load(std::string(CEL_FIXTURES_DIR) + "/air_conditioning.txt");
  return s;
}

constexpr Family kAllFamilies[] = {Family::CEL, Family::EPL, Family::EP,
                                   Family::EL,  Family::WEIBULL,
                                   Family::GAMMA};

const GofReport* find_family(const std::vector<GofReport>& reports, Family f) {
  for (const auto& r : reports) {
    if (r.family == f) return &r;
  }
  return nullptr;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// 1. Reference analysis of the insulating-fluid data (dataset 1).
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = model_comparison(dataset1(), kAllFamilies);
  const double seconds = elapsed_seconds(start);
  const GofReport* cel_row = find_family(reports, Family::CEL);
  check(cel_row != nullptr && cel_row->fit_ok, "CEL fit succeeded");
  check_near(cel_row->estimates[0], 7.0385, 0.005, "theta-hat");
  check_near(cel_row->neg2ll, 137.98, 0.05, "-2LL");
  check_near(cel_row->aic, 139.98, 0.05, "AIC");
  check_near(cel_row->bic, 140.92, 0.05, "BIC");
  check_near(cel_row->aicc, 140.21, 0.05, "AICc");
  check_near(cel_row->ks_stat, 0.1131, 0.001, "KS");
  check_near(cel_row->ks_pvalue, 0.9458, 0.01, "p-value");
  char buf[128];
  std::snprintf(buf, sizeof(buf), "runtime %.3f s < 1 s", seconds);
  check(seconds < 1.0, buf);
}

// 2. Reference analysis of the air-conditioning data (dataset 2). The
// reference KS and p cells of the CEL row are not reproducible from the
// data: the published 0.1061 equals max_i |i/n - F(x_(i))| (right step
// limits only), while the KS supremum over this tied sample is 0.13947,
// p = 0.5568. Those two checks fail by construction and are retained
// deliberately.
void criterion_2() {
  const auto reports = model_comparison(dataset2(), kAllFamilies);
  const GofReport* cel_row = find_family(reports, Family::CEL);
  check(cel_row != nullptr && cel_row->fit_ok, "CEL fit succeeded");
  check_near(cel_row->estimates[0], 30.267, 0.05, "theta-hat");
  check_near(cel_row->neg2ll, 307.17, 0.1, "-2LL");
  check_near(cel_row->ks_stat, 0.1061, 0.001,
             "KS (published cell is not the two-sided supremum)");
  check_near(cel_row->ks_pvalue, 0.8695, 0.01,
             "p-value (follows the unreproducible KS cell)");
}

// 3. Published competitor rows for both datasets.
void criterion_3() {
  struct Row {
    const Sample* data;
    Family family;
    double p1, p2;
    double neg2ll;
  };
  const Row rows[] = {
      {&dataset1(), Family::EPL, 0.0334, 0.5521, 136.18},
      {&dataset1(), Family::EL, 0.0393, 0.0982, 135.98},
      {&dataset1(), Family::EP, 0.0409, 2.2112, 136.89},
      {&dataset1(), Family::GAMMA, 0.0480, 0.6897, 137.23},
      {&dataset2(), Family::EPL, 0.0101, 0.9193, 302.87},
      {&dataset2(), Family::EL, 0.0111, 0.1932, 302.83},
      {&dataset2(), Family::EP, 0.0105, 1.8243, 303.22},
      {&dataset2(), Family::GAMMA, 0.0136, 0.8119, 304.33},
  };
  for (const Row& row : rows) {
    const FitResult fit = fit_competitor(row.family, *row.data);
    const std::string tag = std::string(family_name(row.family)) +
                            (row.data == &dataset1() ? " ds1" : " ds2");
    check_near(-2.0 * fit.log_likelihood, row.neg2ll, 0.1, tag + " -2LL");
    // The EPL ds2 second parameter sits on a flat ridge: the optimum is
    // 0.89868 (-2LL 302.8739), 2.24% from the published 0.9193 (302.8749);
    // the published point is not the argmin, so this check fails honestly.
    check(std::fabs(fit.estimates[0] - row.p1) <= 0.02 * row.p1,
          tag + " estimate 1 within 2%");
    check(std::fabs(fit.estimates[1] - row.p2) <= 0.02 * row.p2,
          tag + " estimate 2 within 2%");
  }
  // Weibull: dataset 1 within +/- 0.5 on -2LL; the dataset-2 row of the
  // paper is internally inconsistent and excluded.
  const FitResult weibull = fit_competitor(Family::WEIBULL, dataset1());
  check_near(-2.0 * weibull.log_likelihood, 136.77, 0.5, "weibull ds1 -2LL");
}

// 4. Published Monte Carlo study of the estimator.
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const int sizes[] = {20, 30, 50, 90, 150, 200};
  constexpr int kReps = 2500;
  constexpr std::uint64_t kSeed = 20260811;
  const auto summaries =
      run_simulation_study(Theta(2.0), sizes, kReps, kSeed, {});
  const double seconds = elapsed_seconds(start);

  struct Published {
    int n;
    double bias, mse, var, est;
  };
  const Published table[] = {
      {20, 0.11554, 0.53363, 0.50319, 2.11554},
      {30, 0.07354, 0.29175, 0.30196, 2.07354},
      {50, 0.04340, 0.16161, 0.16965, 2.04340},
      {90, 0.01612, 0.08701, 0.08982, 2.01612},
      {150, 0.01415, 0.05453, 0.05321, 2.01415},
      {200, 0.00896, 0.03761, 0.03949, 2.00896},
  };
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const SimSummary& s = summaries[i];
    const Published& p = table[i];
    // Monte Carlo standard error of the bias estimate.
    const double se = std::sqrt(s.variance / s.replications);
    char tag[64];
    std::snprintf(tag, sizeof(tag), "n=%d bias", s.n);
    check_near(s.bias, p.bias, 3.0 * se, tag);
    std::snprintf(tag, sizeof(tag), "n=%d mean estimate", s.n);
    check_near(s.mean_estimate, p.est, 3.0 * se, tag);
    std::snprintf(tag, sizeof(tag), "n=%d no failures", s.n);
    check(s.failures == 0, tag);
  }
  for (std::size_t i = 1; i < summaries.size(); ++i) {
    char tag[64];
    std::snprintf(tag, sizeof(tag), "MSE decreases: n=%d -> n=%d",
                  summaries[i - 1].n, summaries[i].n);
    check(summaries[i].mse < summaries[i - 1].mse, tag);
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "runtime %.1f s < 300 s", seconds);
  check(seconds < 300.0, buf);
}

// 5. Analytic identity suite.
void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  for (double th : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    const CelDistribution d(th);
    char tag[96];

    const double mass =
        integrate_semi_infinite([&](double x) { return d.pdf(x); }, 0.0).value;
    std::snprintf(tag, sizeof(tag), "theta=%g normalization", th);
    check(std::fabs(mass - 1.0) <= 1e-8, tag);

    bool cdf_deriv_ok = true, complement_ok = true, hazard_ok = true;
    bool cumhaz_ok = true, hazard_decreasing = true;
    double prev_hazard = d.hazard(0.0);
    for (double x = 0.1; x <= 50.0; x += 0.5) {
      const double h = 1e-5 * (1.0 + x);
      const double deriv = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
      if (std::fabs(deriv - d.pdf(x)) > 1e-6 * std::max(1.0, d.pdf(x))) {
        cdf_deriv_ok = false;
      }
      if (std::fabs(d.survival(x) + d.cdf(x) - 1.0) > 1e-14) {
        complement_ok = false;
      }
      if (std::fabs(d.hazard(x) - d.pdf(x) / d.survival(x)) >
          1e-13 * d.hazard(x)) {
        hazard_ok = false;
      }
      if (std::fabs(d.cumulative_hazard(x) + std::log(d.survival(x))) >
          1e-13 * std::max(1.0, d.cumulative_hazard(x))) {
        cumhaz_ok = false;
      }
      if (d.hazard(x) >= prev_hazard) {
        hazard_decreasing = false;
      }
      prev_hazard = d.hazard(x);
    }
    std::snprintf(tag, sizeof(tag), "theta=%g cdf' = pdf", th);
    check(cdf_deriv_ok, tag);
    std::snprintf(tag, sizeof(tag), "theta=%g survival = 1 - cdf", th);
    check(complement_ok, tag);
    std::snprintf(tag, sizeof(tag), "theta=%g hazard = pdf/survival", th);
    check(hazard_ok, tag);
    std::snprintf(tag, sizeof(tag), "theta=%g cumhaz = -log survival", th);
    check(cumhaz_ok, tag);
    std::snprintf(tag, sizeof(tag), "theta=%g hazard strictly decreasing", th);
    check(hazard_decreasing, tag);

    bool roundtrip_ok = true;
    for (double u = 0.02; u < 1.0; u += 0.02) {
      const double x = d.quantile(u);
      if (std::fabs(d.cdf(x) - u) > 1e-9) roundtrip_ok = false;
    }
    for (double x : {0.05, 0.9, 3.0, 40.0}) {
      if (std::fabs(d.quantile(d.cdf(x)) - x) > 1e-9 * std::max(1.0, x)) {
        roundtrip_ok = false;
      }
    }
    std::snprintf(tag, sizeof(tag), "theta=%g quantile roundtrips", th);
    check(roundtrip_ok, tag);
  }

  // Normalization of the five competitor densities.
  const CompetitorParams comps[] = {
      {Family::EPL, 0.4, 0.8},    {Family::EP, 0.7, 1.3},
      {Family::EL, 0.9, 0.25},    {Family::WEIBULL, 0.6, 0.8},
      {Family::GAMMA, 0.8, 1.7},
  };
  for (const auto& c : comps) {
    const double mass =
        integrate_semi_infinite(
            [&](double x) { return x > 0.0 ? comp_pdf(c, x) : 0.0; }, 0.0)
            .value;
    char tag[96];
    std::snprintf(tag, sizeof(tag), "%s normalization",
                  family_name(c.family));
    check(std::fabs(mass - 1.0) <= 1e-8, tag);
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "runtime %.2f s < 10 s",
                elapsed_seconds(start));
  check(elapsed_seconds(start) < 10.0, buf);
}

// 6. Oracle equivalence.
void criterion_6() {
  // Fractional moments vs quadrature, six orders x four thetas. The
  // moment integrand has power singularities at both axis ends, so the
  // oracle uses an exp-sinh rule (an independent quadrature family).
  for (double th : {0.5, 1.0, 2.0, 10.0}) {
    const CelDistribution d(th);
    for (double r : {-0.5, -0.25, 0.25, 0.5, 0.75, 0.9}) {
      const double closed = fractional_moment(d, r);
      const double quad = cel_test::de_integrate_positive_axis(
          [&](double x) { return std::pow(x, r) * d.pdf(x); });
      char tag[96];
      std::snprintf(tag, sizeof(tag), "E[X^%g] theta=%g", r, th);
      check(std::fabs(closed - quad) <= 1e-7 * std::fabs(quad), tag);
    }
  }

  // Closed-form entropies at integer orders vs quadrature.
  for (double th : {0.5, 1.0, 2.0, 10.0}) {
    const CelDistribution d(th);
    for (int order : {2, 3}) {
      double closed_sum = 0.0;
      for (int k = 0; k <= order; ++k) {
        double binom = 1.0;
        for (int i = 1; i <= k; ++i) {
          binom *= static_cast<double>(order - k + i) / i;
        }
        closed_sum += binom * std::pow(2.0, order - k) /
                      ((3.0 * order - k - 1.0) *
                       std::pow(th, 3.0 * order - k - 1.0));
      }
      const double closed_integral =
          std::pow(th * th / (th + 1.0), order) * closed_sum;
      const double renyi_closed =
          std::log(closed_integral) / (1.0 - order);
      const double tsallis_closed =
          (1.0 - closed_integral) / (1.0 - order);
      char tag[96];
      std::snprintf(tag, sizeof(tag), "renyi closed=quad theta=%g order=%d",
                    th, order);
      check(std::fabs(renyi_entropy(d, EntropyOrder(order)) - renyi_closed) <=
                1e-8,
            tag);
      std::snprintf(tag, sizeof(tag), "tsallis closed=quad theta=%g order=%d",
                    th, order);
      check(std::fabs(tsallis_entropy(d, EntropyOrder(order)) -
                      tsallis_closed) <= 1e-8,
            tag);
    }
    // Renyi-Tsallis algebraic inter-identity.
    for (double order : {0.7, 2.0, 3.0}) {
      const double renyi = renyi_entropy(d, EntropyOrder(order));
      const double tsallis = tsallis_entropy(d, EntropyOrder(order));
      const double implied =
          (1.0 - std::exp((1.0 - order) * renyi)) / (1.0 - order);
      char tag[96];
      std::snprintf(tag, sizeof(tag),
                    "renyi<->tsallis identity theta=%g order=%g", th, order);
      check(std::fabs(tsallis - implied) <= 1e-10, tag);
    }
  }

  // Order-statistic densities: unit mass.
  const CelDistribution d2(2.0);
  const std::pair<int, int> specs[] = {{1, 5}, {3, 5}, {5, 5}, {1, 30}};
  for (const auto& [r, m] : specs) {
    const OrderStatSpec spec(r, m);
    const double mass =
        integrate_semi_infinite(
            [&](double x) { return order_stat_pdf(d2, spec, x); }, 0.0)
            .value;
    char tag[64];
    std::snprintf(tag, sizeof(tag), "order stat (%d,%d) unit mass", r, m);
    check(std::fabs(mass - 1.0) <= 1e-8, tag);
  }

  // Monte Carlo histogram of the 3rd of 5 vs the density, KS < 0.005.
  {
    const OrderStatSpec spec(3, 5);
    constexpr int kReps = 1000000;
    SeededStream stream{2026, 7, 0};
    std::vector<double> thirds(kReps);
    double buf5[5];
    for (int i = 0; i < kReps; ++i) {
      for (double& v : buf5) v = d2.quantile(stream.next_open_unit());
      std::sort(buf5, buf5 + 5);
      thirds[i] = buf5[2];
    }
    std::sort(thirds.begin(), thirds.end());
    auto order_cdf = [&](double x) {
      const double g = d2.cdf(x);
      const double s = 1.0 - g;
      return 10.0 * g * g * g * s * s + 5.0 * g * g * g * g * s +
             g * g * g * g * g;
    };
    double dist = 0.0;
    for (int i = 0; i < kReps; ++i) {
      const double f = order_cdf(thirds[i]);
      dist = std::max(dist, std::fabs((i + 1.0) / kReps - f));
      dist = std::max(dist, std::fabs(f - static_cast<double>(i) / kReps));
    }
    char tag[96];
    std::snprintf(tag, sizeof(tag),
                  "order stat (3,5) Monte Carlo KS %.4f < 0.005", dist);
    check(dist < 0.005, tag);
  }
}

// 7. Moment nonexistence via the truncated mean.
void criterion_7() {
  for (double th : {1.0, 2.0}) {
    const CelDistribution d(th);
    const double t2 = truncated_mean(d, 1e2);
    const double t4 = truncated_mean(d, 1e4);
    const double t6 = truncated_mean(d, 1e6);
    const double tail_coeff = th * th / (th + 1.0);
    const double expected_step = tail_coeff * std::log(1e2);
    char tag[96];
    std::snprintf(tag, sizeof(tag), "theta=%g increment 1e2 -> 1e4", th);
    check(std::fabs((t4 - t2) - expected_step) <= 0.05 * expected_step, tag);
    std::snprintf(tag, sizeof(tag), "theta=%g increment 1e4 -> 1e6", th);
    check(std::fabs((t6 - t4) - expected_step) <= 0.05 * expected_step, tag);
    std::snprintf(tag, sizeof(tag), "theta=%g total span = coeff ln 1e4", th);
    check(std::fabs((t6 - t2) - tail_coeff * std::log(1e4)) <=
              0.05 * tail_coeff * std::log(1e4),
          tag);
  }
}

// 8. Likelihood-ratio ordering on random theta pairs.
void criterion_8() {
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i) {
    grid.push_back(0.01 * std::pow(1e4, i / 199.0));
  }
  SeededStream stream{20260811, 0, 0};
  for (int pair = 0; pair < 10; ++pair) {
    const double a = 0.1 + 20.0 * stream.next_open_unit();
    const double b = 0.1 + 20.0 * stream.next_open_unit();
    const double theta1 = std::max(a, b) + 1e-3;
    const double theta2 = std::min(a, b);
    char tag[96];
    std::snprintf(tag, sizeof(tag), "lr ordering theta1=%.3f > theta2=%.3f",
                  theta1, theta2);
    check(lr_ordering_check(Theta(theta1), Theta(theta2), grid), tag);
  }
}

// 9. Determinism across runs and thread counts.
void criterion_9() {
  const int sizes[] = {20, 50};
  SimulationOptions serial;
  serial.threads = 1;
  SimulationOptions parallel;
  parallel.threads = 8;
  const auto a = run_simulation_study(Theta(2.0), sizes, 300, 97, serial);
  const auto b = run_simulation_study(Theta(2.0), sizes, 300, 97, parallel);
  const auto c = run_simulation_study(Theta(2.0), sizes, 300, 97, parallel);
  bool identical = a.size() == b.size() && b.size() == c.size();
  for (std::size_t i = 0; identical && i < a.size(); ++i) {
    identical = std::memcmp(&a[i], &b[i], sizeof(SimSummary)) == 0 &&
                std::memcmp(&b[i], &c[i], sizeof(SimSummary)) == 0;
  }
  check(identical, "summaries byte-identical across runs and thread counts");

  const CelDistribution d(0.5);
  SeededStream s1{11, 2, 0}, s2{11, 2, 0};
  const auto draw1 = sample_cel(d, 10000, s1);
  const auto draw2 = sample_cel(d, 10000, s2);
  check(std::memcmp(draw1.data(), draw2.data(),
                    draw1.size() * sizeof(double)) == 0,
        "sampler byte-identical for equal (seed, stream)");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
    return 2;
  }
  const int criterion = std::atoi(argv[1]);
  const char* names[] = {
      "insulating-fluid reference analysis (dataset 1)",
      "air-conditioning reference analysis (dataset 2)",
      "published competitor rows",
      "Monte Carlo study reference values",
      "analytic identity suite",
      "oracle equivalence",
      "moment nonexistence (truncated mean growth)",
      "likelihood-ratio ordering",
      "determinism",
  };
  if (criterion < 1 || criterion > 9) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
    return 2;
  }
  std::printf("criterion %d: %s\n", criterion, names[criterion - 1]);
  switch (criterion) {
    case 1: criterion_1(); break;
    case 2: criterion_2(); break;
    case 3: criterion_3(); break;
    case 4: criterion_4(); break;
    case 5: criterion_5(); break;
    case 6: criterion_6(); break;
    case 7: criterion_7(); break;
    case 8: criterion_8(); break;
    case 9: criterion_9(); break;
  }
  std::printf("%s criterion %d: %s (%d/%d checks passed)\n",
              g_failed == 0 ? "PASS" : "FAIL", criterion, names[criterion - 1],
              g_checks - g_failed, g_checks);
  return g_failed == 0 ? 0 : 1;
}
