#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "recf/special_functions.hpp"

using namespace recf;

TEST_CASE("oracle self-check: series and continued-fraction branches overlap") {
    // Both reference branches must agree where both converge, otherwise the
    // oracle itself is suspect.
    for (double x : {1.6, 2.0, 2.4, 2.8}) {
        const double via_series = 0.5 * (1.0 + static_cast<double>(oracle::erf_series(x / std::sqrt(2.0L))));
        const double via_cf = 1.0 - 0.5 * static_cast<double>(oracle::erfc_contfrac(x / std::sqrt(2.0L)));
        CHECK(std::fabs(via_series - via_cf) < 1e-15);
    }
}

TEST_CASE("Probability validates its range") {
    CHECK(Probability(0.0).value() == 0.0);
    CHECK(Probability(1.0).value() == 1.0);
    CHECK(Probability(0.25).value() == 0.25);
    CHECK_THROWS_AS(Probability(-0.001), std::domain_error);
    CHECK_THROWS_AS(Probability(1.001), std::domain_error);
    CHECK_THROWS_AS(Probability(std::nan("")), std::domain_error);
}

TEST_CASE("log_gamma matches lgamma and exact values") {
    CHECK(std::fabs(log_gamma(1.0)) < 1e-14);
    CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
    for (double x : {0.0625, 0.1, 0.3, 0.9, 1.5, 4.5, 10.0, 100.0, 1000.0})
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("normal cdf: anchor values, symmetry, oracle sweep") {
    CHECK(std_normal_cdf(0.0).value() == 0.5);
    CHECK(std_normal_cdf(1.959964).value() == doctest::Approx(0.975).epsilon(1e-6));

    for (int i = 0; i <= 600; ++i) {
        const double x = -6.0 + i * 0.02;
        CHECK(std::fabs(std_normal_cdf(x).value() + std_normal_cdf(-x).value() - 1.0) <= 1e-12);
        CHECK(std::fabs(std_normal_cdf(x).value() - oracle::phi(x)) <= 1e-12);
    }

    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = -8.0 + i * 16.0 / 10000.0;
        const double v = std_normal_cdf(x);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS_AS(std_normal_cdf(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(std_normal_cdf(std::nan("")), std::domain_error);
}

TEST_CASE("normal pdf: peak value, evenness, far tail") {
    CHECK(std_normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-12));
    for (double x : {0.3, 1.0, 2.5, 6.0})
        CHECK(std_normal_pdf(x) == std_normal_pdf(-x));
    CHECK(std_normal_pdf(10.0) < 1e-21);
    CHECK(std_normal_pdf(10.0) > 0.0);
    CHECK_THROWS_AS(std_normal_pdf(std::nan("")), std::domain_error);
}

TEST_CASE("normal quantile: anchors, symmetry, bisection oracle, roundtrip") {
    CHECK(std_normal_quantile(0.5) == 0.0);
    CHECK(std_normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-6));

    for (double u : {0.001, 0.01, 0.1, 0.3, 0.45})
        CHECK(std::fabs(std_normal_quantile(u) + std_normal_quantile(1.0 - u)) <= 1e-9);

    for (double u : {0.0005, 0.023, 0.31, 0.5, 0.77, 0.941, 0.9999}) {
        const double ref = oracle::bisect([](double x) { return oracle::phi(x); },
                                          -9.0, 9.0, u);
        CHECK(std_normal_quantile(u) == doctest::Approx(ref).epsilon(1e-9));
    }

    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> unif(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < 1000; ++i) {
        const double u = unif(gen);
        CHECK(std::fabs(std_normal_cdf(std_normal_quantile(u)).value() - u) <= 1e-9);
    }

    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 10000; ++i) {
        const double q = std_normal_quantile(i / 10000.0);
        CHECK(q > prev);
        prev = q;
    }

    CHECK_THROWS_AS(std_normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(-0.2), std::domain_error);
}

TEST_CASE("regularized gamma: exponential case, erf identity, monotonicity") {
    for (double x : {0.5, 1.0, 2.0})
        CHECK(std::fabs(regularized_gamma_p(1.0, x).value() - (1.0 - std::exp(-x))) <= 1e-10);
    CHECK(regularized_gamma_p(0.3, 0.0).value() == 0.0);
    CHECK(regularized_gamma_p(0.5, 1.0).value() == doctest::Approx(0.842700793).epsilon(1e-8));
    // P(1/2, x) = erf(sqrt(x)) across a range, against the series oracle.
    for (double x : {0.04, 0.25, 1.0, 2.25, 4.0})
        CHECK(regularized_gamma_p(0.5, x).value() ==
              doctest::Approx(static_cast<double>(oracle::erf_series(std::sqrt(x)))).epsilon(1e-11));

    for (double a : {0.0625, 1.0, 4.0}) {
        double prev = -1.0;
        for (int i = 0; i <= 10000; ++i) {
            const double x = i * 30.0 / 10000.0;
            const double v = regularized_gamma_p(a, x);
            CHECK(v >= prev);
            prev = v;
        }
    }
    CHECK_THROWS_AS(regularized_gamma_p(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_gamma_p(2.0, -0.1), std::domain_error);
}

TEST_CASE("inverse regularized gamma: exponential case, roundtrips, anchor") {
    for (double p : {0.05, 0.5, 0.95})
        CHECK(std::fabs(inverse_regularized_gamma_p(1.0, p) + std::log1p(-p)) <= 1e-9);

    const double ref = oracle::bisect(
        [](double x) { return regularized_gamma_p(2.0, x).value(); }, 0.0, 50.0, 0.5);
    CHECK(inverse_regularized_gamma_p(2.0, 0.5) == doctest::Approx(1.678346990).epsilon(1e-6));
    CHECK(inverse_regularized_gamma_p(2.0, 0.5) == doctest::Approx(ref).epsilon(1e-9));

    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> unif(1e-6, 1.0 - 1e-6);
    for (double a : {0.0625, 0.25, 1.0, 4.0, 64.0}) {
        for (int i = 0; i < 1000; ++i) {
            const double p = unif(gen);
            const double x = inverse_regularized_gamma_p(a, p);
            CHECK(std::fabs(regularized_gamma_p(a, x).value() - p) <= 1e-9);
        }
        double prev = 0.0;
        for (int i = 1; i < 200; ++i) {
            const double x = inverse_regularized_gamma_p(a, i / 200.0);
            CHECK(x > prev);
            prev = x;
        }
    }
    CHECK_THROWS_AS(inverse_regularized_gamma_p(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(inverse_regularized_gamma_p(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(inverse_regularized_gamma_p(-1.0, 0.5), std::domain_error);
}
