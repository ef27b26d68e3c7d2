#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "tci/normal.hpp"

using namespace tci;

TEST_CASE("cdf matches the series/continued-fraction oracle to 1e-12") {
    for (double z = -8.0; z <= 8.0; z += 0.25)
        CHECK(std::abs(std_normal_cdf(z) - static_cast<double>(oracles::normal_cdf(z))) <= 1e-12);
}

TEST_CASE("cdf anchor values") {
    CHECK(std_normal_cdf(0.0) == 0.5);
    CHECK(std::abs(std_normal_cdf(40.0) - 1.0) <= 1e-15);
    CHECK(std::abs(std_normal_cdf(1.0) - oracles::frozen::phi_of_1) <= 1e-12);
}

TEST_CASE("cdf is symmetric and monotone") {
    double prev = -1.0;
    for (double z = -10.0; z <= 10.0; z += 0.125) {
        CHECK(std::abs(std_normal_cdf(-z) - (1.0 - std_normal_cdf(z))) <= 1e-14);
        const double c = std_normal_cdf(z);
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("log cdf agrees with log(cdf) and stays finite deep in the tail") {
    for (double z = -7.0; z <= 7.0; z += 0.5)
        CHECK(std_normal_log_cdf(z) == doctest::Approx(std::log(std_normal_cdf(z))).epsilon(1e-12));
    for (double z : {-10.0, -20.0, -40.0, -100.0}) {
        const double got = std_normal_log_cdf(z);
        const double want = static_cast<double>(oracles::normal_log_cdf(z));
        CHECK(std::isfinite(got));
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("quantile anchors, round trip, and domain errors") {
    CHECK(std::abs(std_normal_quantile(0.5)) < 1e-12);
    CHECK(std::abs(std_normal_quantile(0.975) - oracles::frozen::quantile_975) <= 1e-9);
    for (double z : {-3.0, -1.0, 0.0, 1.0, 3.0})
        CHECK(std::abs(std_normal_quantile(std_normal_cdf(z)) - z) <= 1e-9);
    for (double p = 0.01; p < 1.0; p += 0.01)
        CHECK(std::abs(std_normal_cdf(std_normal_quantile(p)) - p) <= 1e-10);
    CHECK_THROWS_AS(std_normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(-0.2), std::domain_error);
}

TEST_CASE("quantile agrees with the bisection oracle") {
    for (double p : {0.001, 0.023, 0.2, 0.5, 0.9, 0.975, 0.999})
        CHECK(std::abs(std_normal_quantile(p) - oracles::normal_quantile(p)) <= 1e-9);
}

TEST_CASE("target distribution validates its fields") {
    CHECK_THROWS_AS(TargetDist(0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TargetDist(0.0, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TargetDist(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(TargetDist(-0.5, 1.0, 2.0));
}

TEST_CASE("var/es closed forms at the anchor points") {
    {
        const RiskMeasures rm = var_es(TargetDist(0.0, 1.0, 1.0), 0.975);
        CHECK(rm.var == doctest::Approx(oracles::frozen::quantile_975).epsilon(1e-9));
        CHECK(rm.es == doctest::Approx(oracles::frozen::es_standard_975).epsilon(1e-9));
    }
    {
        const RiskMeasures rm = var_es(TargetDist(0.05, 0.2, 1.0), 0.5);
        CHECK(rm.var == doctest::Approx(-0.05).epsilon(1e-12));
        CHECK(rm.es == doctest::Approx(oracles::frozen::es_shifted_half).epsilon(1e-9));
    }
    // degenerate-volatility limit: var -> es -> -MT as delta -> 0
    {
        const RiskMeasures rm = var_es(TargetDist(0.07, 1e-12, 2.0), 0.9);
        CHECK(rm.var == doctest::Approx(-0.14).epsilon(1e-9));
        CHECK(rm.es == doctest::Approx(-0.14).epsilon(1e-9));
    }
    CHECK_THROWS_AS(var_es(TargetDist(0.0, 1.0, 1.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(var_es(TargetDist(0.0, 1.0, 1.0), 1.0), std::domain_error);
}

TEST_CASE("es dominates var on the upper half of confidence levels") {
    const TargetDist target(0.03, 0.25, 2.0);
    for (int i = 0; i < 99; ++i) {
        const double alpha = 0.5 + 0.005 * i;
        const RiskMeasures rm = var_es(target, alpha);
        CHECK(rm.es >= rm.var);
    }
}

TEST_CASE("empirical quantile of simulated losses matches var within 3 binomial SE") {
    const TargetDist target(0.05, 0.2, 1.0);
    const double alpha = 0.975;
    const long n = 1000000;
    std::mt19937_64 rng(91);
    std::normal_distribution<double> gauss(target.M * target.T,
                                           target.delta * std::sqrt(target.T));
    std::vector<double> losses(n);
    for (long i = 0; i < n; ++i)
        losses[i] = -gauss(rng);
    std::nth_element(losses.begin(), losses.begin() + static_cast<long>(alpha * n),
                     losses.end());
    const double empirical = losses[static_cast<long>(alpha * n)];
    const RiskMeasures rm = var_es(target, alpha);
    // binomial SE mapped through the loss density at the quantile
    const double sd = target.delta * std::sqrt(target.T);
    const double density = std_normal_pdf((rm.var + target.M * target.T) / sd) / sd;
    const double se = std::sqrt(alpha * (1.0 - alpha) / n) / density;
    CHECK(std::abs(empirical - rm.var) <= 3.0 * se);
}
