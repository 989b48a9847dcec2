#include "cel/gof.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "cel/distribution.hpp"
#include "cel/fitting.hpp"
#include "cel/simulation.hpp"
#include "doctest.h"

using namespace cel;

namespace {

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

// Brute-force supremum of |F_n - F0|: a dense grid over the padded sample
// range plus both one-sided limits at every jump of the step function.
double brute_force_ks(const Sample& s, const std::function<double(double)>& F0) {
  const double lo = s.min() / 10.0;
  const double hi = s.max() * 10.0;
  double d = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double x = lo + (hi - lo) * i / 100000.0;
    d = std::max(d, std::fabs(ecdf(s, x) - F0(x)));
  }
  const double n = static_cast<double>(s.size());
  const auto values = s.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = F0(values[i]);
    d = std::max({d, std::fabs(ecdf(s, values[i]) - f),
                  std::fabs(static_cast<double>(i) / n - f)});
  }
  return d;
}

}  // namespace

TEST_CASE("ecdf step function") {
  const Sample s({1.0, 2.0, 3.0}, "steps");
  CHECK(ecdf(s, 0.5) == 0.0);
  CHECK(ecdf(s, 2.0) == doctest::Approx(2.0 / 3.0));
  CHECK(ecdf(s, 2.5) == doctest::Approx(2.0 / 3.0));
  CHECK(ecdf(s, 3.0) == 1.0);
  CHECK(ecdf(s, 99.0) == 1.0);
}

TEST_CASE("ks_statistic at a symmetric construction") {
  // Points placed exactly at the u = (i - 1/2)/n quantiles give D = 1/(2n).
  const int n = 8;
  const CelDistribution d(2.0);
  std::vector<double> values;
  for (int i = 1; i <= n; ++i) {
    values.push_back(d.quantile((i - 0.5) / n));
  }
  const Sample s(values, "quantiles");
  const double D = ks_statistic(s, [&](double x) { return d.cdf(x); });
  CHECK(D == doctest::Approx(0.5 / n).epsilon(1e-12));
}

TEST_CASE("ks_statistic for the fitted case studies") {
  const FitResult f1 = fit_cel(dataset1());
  const CelDistribution d1(f1.estimates[0]);
  const double D1 = ks_statistic(dataset1(), [&](double x) { return d1.cdf(x); });
  CHECK(D1 == doctest::Approx(0.1131).epsilon(0.001 / 0.1131));

  // The published value 0.1061 for this fit equals max_i |i/n - F(x_(i))|, which
  // drops the lower step limits; the true supremum over the tied sample is
  // 0.13947 (frozen from the brute-force oracle below).
  const FitResult f2 = fit_cel(dataset2());
  const CelDistribution d2(f2.estimates[0]);
  const double D2 = ks_statistic(dataset2(), [&](double x) { return d2.cdf(x); });
  CHECK(D2 == doctest::Approx(0.1394723338674622).epsilon(1e-6));
  CHECK(D2 ==
        doctest::Approx(brute_force_ks(dataset2(),
                                       [&](double x) { return d2.cdf(x); }))
            .epsilon(1e-6));
}

TEST_CASE("ks_statistic equals the brute-force supremum on random samples") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> unif(0.2, 5.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> values;
    const int n = 3 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) values.push_back(unif(rng));
    if (trial % 2 == 0) values[0] = values[n / 2];  // force ties sometimes
    const Sample s(values, "random");
    const CelDistribution d(1.0 + (trial % 4));
    auto F0 = [&](double x) { return d.cdf(x); };
    CHECK(ks_statistic(s, F0) ==
          doctest::Approx(brute_force_ks(s, F0)).epsilon(1e-6));
  }
}

TEST_CASE("exact KS tail probabilities match reference values") {
  // References: exact finite-n distribution of D_n (independent software).
  CHECK(ks_pvalue_exact(0.1131, 19) ==
        doctest::Approx(0.9457220263097645).epsilon(1e-8));
  CHECK(ks_pvalue_exact(0.1061, 30) ==
        doctest::Approx(0.8532403781446639).epsilon(1e-8));
  CHECK(ks_pvalue_exact(0.2, 10) ==
        doctest::Approx(0.7487190399999999).epsilon(1e-8));
  CHECK(ks_pvalue_exact(0.05, 100) ==
        doctest::Approx(0.9532159710635725).epsilon(1e-8));
  CHECK(ks_pvalue_exact(0.3, 5) == doctest::Approx(0.664).epsilon(1e-8));
  CHECK(ks_pvalue_exact(0.15, 25) ==
        doctest::Approx(0.5758089853851963).epsilon(1e-8));
  CHECK(ks_pvalue_exact(0.02, 140) ==
        doctest::Approx(0.9999999774822331).epsilon(1e-8));
}

TEST_CASE("asymptotic KS tail probabilities match the series") {
  CHECK(ks_pvalue_asymptotic(0.1131, 19) ==
        doctest::Approx(0.968251416180237).epsilon(1e-10));
  CHECK(ks_pvalue_asymptotic(0.1061, 30) ==
        doctest::Approx(0.8882347680667724).epsilon(1e-10));
  CHECK(ks_pvalue_asymptotic(0.3, 5) ==
        doctest::Approx(0.7590978384203948).epsilon(1e-10));
  CHECK(ks_pvalue_asymptotic(0.15, 25) ==
        doctest::Approx(0.6271670417762616).epsilon(1e-10));
}

TEST_CASE("ks_pvalue edge cases and monotonicity") {
  CHECK(ks_pvalue(0.0, 19) == 1.0);
  CHECK(ks_pvalue(1.0, 19) == 0.0);
  for (int n : {10, 30, 500}) {
    double prev = 1.0;
    for (double d = 0.02; d < 0.8; d += 0.02) {
      const double p = ks_pvalue(d, n);
      CHECK(p <= prev + 1e-12);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      if (p > 1e-14 && prev < 1.0 - 1e-14) {
        CHECK(p < prev);  // strictly decreasing away from the clamps
      }
      prev = p;
    }
  }
  CHECK_THROWS_AS(ks_pvalue(-0.1, 10), std::domain_error);
  CHECK_THROWS_AS(ks_pvalue(0.1, 0), std::domain_error);
}

TEST_CASE("exact and asymptotic p-values agree for large n") {
  for (double d : {0.02, 0.05, 0.08}) {
    CHECK(ks_pvalue_exact(d, 400) ==
          doctest::Approx(ks_pvalue_asymptotic(d, 400)).epsilon(0.02));
  }
}

TEST_CASE("model comparison reproduces the insulating-fluid analysis") {
  const auto reports = model_comparison(dataset1(), kAllFamilies);
  REQUIRE(reports.size() == 6);
  const GofReport* cel_row = nullptr;
  for (const auto& r : reports) {
    CHECK(r.fit_ok);
    if (r.family == Family::CEL) cel_row = &r;
  }
  REQUIRE(cel_row != nullptr);
  CHECK(cel_row->k == 1);
  CHECK(cel_row->n == 19);
  CHECK(cel_row->neg2ll == doctest::Approx(137.98).epsilon(0.05 / 137.98));
  CHECK(cel_row->aic == doctest::Approx(139.98).epsilon(0.05 / 139.98));
  CHECK(cel_row->bic == doctest::Approx(140.92).epsilon(0.05 / 140.92));
  CHECK(cel_row->aicc == doctest::Approx(140.21).epsilon(0.05 / 140.21));
  CHECK(cel_row->ks_stat == doctest::Approx(0.1131).epsilon(0.001 / 0.1131));
  CHECK(cel_row->ks_pvalue == doctest::Approx(0.9458).epsilon(0.01 / 0.9458));

  // CEL has the smallest KS distance among all six families.
  for (const auto& r : reports) {
    if (r.family != Family::CEL) {
      CHECK(cel_row->ks_stat < r.ks_stat);
    }
  }

  // Information-criteria identities hold exactly.
  for (const auto& r : reports) {
    CHECK(r.aic == r.neg2ll + 2.0 * r.k);
    CHECK(r.bic == r.neg2ll + r.k * std::log(r.n));
    CHECK(r.aicc == r.aic + (2.0 * r.k * r.k + 2.0 * r.k) / (r.n - r.k - 1));
  }

  // Sorted by AIC ascending.
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i - 1].aic <= reports[i].aic);
  }
}

TEST_CASE("model comparison reproduces the air-conditioning EL row") {
  const auto reports = model_comparison(dataset2(), kAllFamilies);
  const GofReport* el_row = nullptr;
  for (const auto& r : reports) {
    if (r.family == Family::EL) el_row = &r;
  }
  REQUIRE(el_row != nullptr);
  CHECK(el_row->neg2ll == doctest::Approx(302.83).epsilon(0.1 / 302.83));
  CHECK(el_row->aic == doctest::Approx(306.83).epsilon(0.1 / 306.83));
  CHECK(el_row->bic == doctest::Approx(309.63).epsilon(0.1 / 309.63));
  CHECK(el_row->aicc == doctest::Approx(307.28).epsilon(0.1 / 307.28));
  // EL wins the information criteria on this dataset.
  CHECK(reports.front().family == Family::EL);
}

TEST_CASE("comparison subsets keep exactly the requested families") {
  const Family two[] = {Family::CEL, Family::GAMMA};
  const auto reports = model_comparison(dataset1(), two);
  REQUIRE(reports.size() == 2);
  CHECK((reports[0].family == Family::CEL || reports[1].family == Family::CEL));
  CHECK((reports[0].family == Family::GAMMA ||
         reports[1].family == Family::GAMMA));
}

TEST_CASE("AICc guards against tiny samples") {
  const Sample tiny({1.0, 2.0, 3.0}, "tiny");
  const Family fams[] = {Family::WEIBULL};
  const auto reports = model_comparison(tiny, fams);
  REQUIRE(reports.size() == 1);
  if (reports[0].fit_ok) {
    CHECK(std::isinf(reports[0].aicc));  // n - k - 1 = 0
  }
}

TEST_CASE("sampler self-test: the true-theta fit is not rejected") {
  const CelDistribution d(2.0);
  SeededStream stream{1234, 0, 0};
  const Sample s(sample_cel(d, 200, stream), "self");
  const FitResult fit = fit_cel(s);
  const CelDistribution fitted(fit.estimates[0]);
  const double D = ks_statistic(s, [&](double x) { return fitted.cdf(x); });
  CHECK(ks_pvalue(D, 200) > 0.01);
}

TEST_CASE("bootstrap p-value is deterministic and sane") {
  ComparisonOptions opt;
  opt.bootstrap_pvalue = true;
  opt.bootstrap_replications = 200;
  opt.seed = 77;
  const Family fams[] = {Family::CEL};
  const auto a = model_comparison(dataset1(), fams, opt);
  const auto b = model_comparison(dataset1(), fams, opt);
  REQUIRE(a.size() == 1);
  CHECK(a[0].fit_ok);
  CHECK(a[0].ks_pvalue == b[0].ks_pvalue);
  CHECK(a[0].ks_pvalue > 0.05);  // the model fits its own best fit
  CHECK(a[0].ks_pvalue <= 1.0);
}
