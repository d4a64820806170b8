#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "entropy_lab/bounds.hpp"
#include "entropy_lab/distribution.hpp"
#include "entropy_lab/errors.hpp"
#include "entropy_lab/exact_risk.hpp"

using namespace entropy_lab;

namespace {

std::vector<EstimatorKind> grid_kinds(double a) {
  std::vector<EstimatorKind> kinds = {EstimatorKind::mle(), EstimatorKind::miller_madow()};
  kinds.push_back(EstimatorKind::dirichlet_plugin(a));
  kinds.push_back(EstimatorKind::dirichlet_bayes(a));
  return kinds;
}

}  // namespace

TEST_CASE("log binomial pmf") {
  CHECK(log_binomial_pmf(2, 0.5, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(log_binomial_pmf(5, 0.0, 0) == 0.0);
  CHECK(log_binomial_pmf(5, 0.0, 3) == -std::numeric_limits<double>::infinity());
  CHECK(log_binomial_pmf(5, 1.0, 5) == 0.0);
  CHECK(log_binomial_pmf(5, 1.0, 2) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(log_binomial_pmf(5, 0.5, 6), validation_error);
  CHECK_THROWS_AS(log_binomial_pmf(5, 0.5, -1), validation_error);
  CHECK_THROWS_AS(log_binomial_pmf(5, 1.5, 1), validation_error);

  // against the direct product for a moderate case
  const int n = 30, j = 9;
  const double p = 0.3;
  double direct = 1.0;
  for (int i = 0; i < j; ++i) direct *= static_cast<double>(n - i) / (i + 1);
  direct *= std::pow(p, j) * std::pow(1.0 - p, n - j);
  CHECK(std::exp(log_binomial_pmf(n, p, j)) == doctest::Approx(direct).epsilon(1e-13));

  // pmf sums to 1
  double total = 0.0;
  for (int k = 0; k <= 40; ++k) total += std::exp(log_binomial_pmf(40, 0.37, k));
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("separable bias closed cases") {
  // E H(P_n) at P=(1/2,1/2), n=2 enumerates three outcomes by hand: (ln 2)/2.
  CHECK(exact_bias_separable(EstimatorKind::mle(), Distribution({0.5, 0.5}), 2) ==
        doctest::Approx(-std::log(2.0) / 2.0).epsilon(1e-14));

  // frozen from a 50-digit enumeration
  const Distribution p({0.7, 0.2, 0.1});
  CHECK(exact_bias_separable(EstimatorKind::mle(), p, 5) ==
        doctest::Approx(-0.22667573993768897).epsilon(1e-12));
  CHECK(exact_bias_separable(EstimatorKind::dirichlet_plugin(1.0), p, 5) ==
        doctest::Approx(0.12543146010241223).epsilon(1e-12));

  CHECK_THROWS_AS(exact_bias_separable(EstimatorKind::mle(), p, 0), validation_error);
}

TEST_CASE("separable bias at a deterministic point mass") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 40; ++rep) {
    const int s = 2 + static_cast<int>(rng() % 30);
    const int n = 1 + static_cast<int>(rng() % 200);
    const double a = 0.05 + 3.0 * std::generate_canonical<double, 53>(rng);
    const double denom = n + s * a;
    const double closed = -((s - 1.0) * a / denom) * std::log(a / denom) -
                          ((n + a) / denom) * std::log((n + a) / denom);
    // H(point mass) = 0, and the smoothed estimator is almost surely constant.
    CHECK(exact_bias_separable(EstimatorKind::dirichlet_plugin(a), make_point_mass(s), n) ==
          doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("second-order MLE bias expansion at large n") {
  const Distribution p({0.2, 0.3, 0.5});
  const int n = 1000;
  const double bias = exact_bias_separable(EstimatorKind::mle(), p, n);
  double inv_sum = 0.0;
  for (double pi : p.probs()) inv_sum += 1.0 / pi;
  const double expansion = -(3.0 - 1.0) / (2.0 * n) + (1.0 - inv_sum) / (12.0 * n * n);
  CHECK(std::abs(bias - expansion) < 5e-7);
}

TEST_CASE("first-order bias correction leaves an o(1/n) remainder") {
  const Distribution p({0.2, 0.3, 0.5});
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {100, 1000, 10000}) {
    const double bias = exact_bias_separable(EstimatorKind::mle(), p, n);
    const double residual = std::abs(n * (bias + (3.0 - 1.0) / (2.0 * n)));
    CHECK(residual < prev);
    prev = residual;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("enumeration on the two-outcome coin") {
  const auto report = exact_risk_enumeration(EstimatorKind::mle(), Distribution({0.5, 0.5}), 2);
  const double l2 = std::log(2.0);
  CHECK(report.bias == doctest::Approx(-l2 / 2.0).epsilon(1e-14));
  CHECK(report.variance == doctest::Approx(l2 * l2 / 4.0).epsilon(1e-13));
  CHECK(report.mse == doctest::Approx(report.bias * report.bias + report.variance).epsilon(1e-12));
  CHECK(report.method == RiskMethod::kExactEnumeration);
  CHECK(!report.std_error.has_value());
}

TEST_CASE("enumeration against frozen high-precision oracles") {
  const Distribution p({0.7, 0.2, 0.1});
  const auto mle = exact_risk_enumeration(EstimatorKind::mle(), p, 5);
  CHECK(mle.bias == doctest::Approx(-0.22667573993768897).epsilon(1e-12));
  CHECK(mle.variance == doctest::Approx(0.10334458114549985).epsilon(1e-12));
  CHECK(mle.mse == doctest::Approx(0.15472647222179866).epsilon(1e-12));

  const auto plugin = exact_risk_enumeration(EstimatorKind::dirichlet_plugin(1.0), p, 5);
  CHECK(plugin.bias == doctest::Approx(0.12543146010241223).epsilon(1e-12));
  CHECK(plugin.variance == doctest::Approx(0.011163338881055852).epsilon(1e-12));
  CHECK(plugin.mse == doctest::Approx(0.026896390064478884).epsilon(1e-12));

  const auto bayes =
      exact_risk_enumeration(EstimatorKind::dirichlet_bayes(0.5), Distribution({0.5, 0.5}), 4);
  CHECK(bayes.bias == doctest::Approx(-0.17399567658291183).epsilon(1e-12));
  CHECK(bayes.variance == doctest::Approx(0.01153015873015873).epsilon(1e-12));
  CHECK(bayes.mse == doctest::Approx(0.041804654199703984).epsilon(1e-12));

  const auto miller =
      exact_risk_enumeration(EstimatorKind::miller_madow(), Distribution({0.5, 0.5}), 3);
  CHECK(miller.bias == doctest::Approx(-0.049094887672169029).epsilon(1e-12));
  CHECK(miller.variance == doctest::Approx(0.075965678707506993).epsilon(1e-12));
  CHECK(miller.mse == doctest::Approx(0.078375986703049887).epsilon(1e-12));
}

TEST_CASE("a point mass makes every estimator deterministic") {
  for (const auto& kind : grid_kinds(1.0)) {
    const auto report = exact_risk_enumeration(kind, make_point_mass(3), 6);
    CHECK(report.variance == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(report.mse == doctest::Approx(report.bias * report.bias).epsilon(1e-13));
  }
}

TEST_CASE("feasibility guard") {
  CHECK(enumeration_outcome_count(2, 2) == 3.0);
  CHECK(enumeration_outcome_count(12, 3) == 91.0);
  CHECK_THROWS_AS(exact_risk_enumeration(EstimatorKind::mle(), make_uniform(1000), 1000),
                  resource_error);
}

TEST_CASE("separable bias equals enumeration bias on the desk grid") {
  const std::vector<Distribution> dists2 = {make_uniform(2), make_point_mass(2)};
  const std::vector<Distribution> dists3 = {make_uniform(3), make_point_mass(3),
                                            Distribution({0.7, 0.2, 0.1})};
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    for (const auto& kind : grid_kinds(a)) {
      for (int n = 1; n <= 6; ++n) {
        for (const auto& d : dists2) {
          CHECK(exact_bias_separable(kind, d, n) ==
                doctest::Approx(exact_risk_enumeration(kind, d, n).bias).epsilon(1e-11));
        }
        for (const auto& d : dists3) {
          const auto report = exact_risk_enumeration(kind, d, n);
          CHECK(std::abs(exact_bias_separable(kind, d, n) - report.bias) <= 1e-10);
          CHECK(std::abs(report.mse - (report.bias * report.bias + report.variance)) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("Miller-Madow bias is the MLE bias plus (S-1)/(2n)") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 30; ++rep) {
    const int s = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<double> probs(s, 0.0);
    double sum = 0.0;
    for (double& v : probs) {
      v = std::generate_canonical<double, 53>(rng) + 0.01;
      sum += v;
    }
    for (double& v : probs) v /= sum;
    const Distribution p(probs);
    const double mle = exact_bias_separable(EstimatorKind::mle(), p, n);
    const double miller = exact_bias_separable(EstimatorKind::miller_madow(), p, n);
    CHECK(miller - mle == doctest::Approx((s - 1.0) / (2.0 * n)).epsilon(1e-14));
  }
}

TEST_CASE("enumerated plugin variance never beats the variance bound") {
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    for (int s : {2, 3}) {
      for (int n = 1; n <= 12; ++n) {
        const auto report = exact_risk_enumeration(EstimatorKind::dirichlet_plugin(a),
                                                   s == 2 ? make_uniform(2) : make_uniform(3), n);
        CHECK(report.variance <= variance_upper(n, s, a) + 1e-12);
      }
    }
  }
}
