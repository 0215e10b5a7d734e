#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "liseq/detection.hpp"

using namespace liseq;

TEST_CASE("hypothesis validation") {
    CHECK_NOTHROW(validate({0.25, 1e13, kDefaultT0}));
    CHECK_THROWS_AS(validate({0.0, 1e13, kDefaultT0}), std::domain_error);
    CHECK_THROWS_AS(validate({0.5, 1e13, kDefaultT0}), std::domain_error);
    CHECK_THROWS_AS(validate({0.25, 1e12, kDefaultT0}), std::domain_error);  // T <= T0
    CHECK_NOTHROW(validate({0.25, 1e6, 1e5}));  // T0 overridable
}

TEST_CASE("raw crossover n >~ T^{1+2/t}") {
    // t -> 1/2: exponent 5; at T0 = 2.4e12, T^5 ~ 8e61
    OrderEstimate e = threshold_tn({0.4999999, 2.4e12 * (1 + 1e-9), kDefaultT0});
    CHECK(e.exponent_of_T == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(e.log10_value == doctest::Approx(5.0 * std::log10(2.4e12)).epsilon(1e-6));
    CHECK(e.exponent10() == 61);
    CHECK(e.mantissa() == doctest::Approx(7.96).epsilon(0.01));

    // t = 1/4, T = 1e6 (T0 lowered): T^9 = 1e54
    OrderEstimate e2 = threshold_tn({0.25, 1e6, 1e5});
    CHECK(e2.exponent_of_T == doctest::Approx(9.0));
    CHECK(e2.log10_value == doctest::Approx(54.0));
    CHECK(e2.str() == "1e54");
}

TEST_CASE("averaged crossover n >~ T^{1+1/t}") {
    OrderEstimate e = threshold_tni({0.4999999, 2.4e12 * (1 + 1e-9), kDefaultT0});
    CHECK(e.exponent_of_T == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(e.exponent10() == 37);
    CHECK(e.mantissa() == doctest::Approx(1.38).epsilon(0.01));

    CHECK(threshold_tni({0.25, 1e6, 1e5}).exponent_of_T == doctest::Approx(5.0));
}

TEST_CASE("averaging always lowers the threshold") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> td(0.01, 0.49);
    std::uniform_real_distribution<double> logT(12.5, 20.0);
    for (int i = 0; i < 100; ++i) {
        ViolationHypothesis h{td(rng), std::pow(10.0, logT(rng)), kDefaultT0};
        CHECK(threshold_tni(h).log10_value < threshold_tn(h).log10_value);
    }
}

TEST_CASE("signal magnitude: crossover by construction and the power law") {
    // t -> 1/2, n = T^5: (2n/T)^t / (T^2 ln n) = sqrt(2)/ln n
    double T = 2.4e12 * (1 + 1e-9);
    double n = std::pow(T, 5.0);
    double s = signal_magnitude({0.4999999, T, kDefaultT0}, n);
    double ln_n = std::log(n);
    CHECK(s * ln_n == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
    CHECK(s > 0.5 / ln_n);
    CHECK(s < 2.0 / ln_n);

    // doubling n scales by 2^t up to the slowly varying log
    ViolationHypothesis h{0.25, 1e13, kDefaultT0};
    double n0 = 1e20;
    double ratio = signal_magnitude(h, 2 * n0) / signal_magnitude(h, n0);
    double expected = std::pow(2.0, 0.25) * std::log(n0) / std::log(2 * n0);
    CHECK(ratio == doctest::Approx(expected).epsilon(1e-9));

    CHECK(signal_magnitude({0.25, 1e6, 1e5}, 1e10) > 0.0);
}

TEST_CASE("endpoint slopes: exact low n") {
    auto [s0_1, spi_1] = theta_endpoint_slopes(1, 30);
    CHECK(s0_1 == 3);
    CHECK(abs(spi_1 - Real(1, 35) / 3) < 1e-28);

    auto [s0_2, spi_2] = theta_endpoint_slopes(2, 30);
    CHECK(s0_2 == 10);
    CHECK(abs(spi_2 - Real(10, 35) / 21) < 1e-28);

    CHECK_THROWS_AS(theta_endpoint_slopes(0, 20), std::domain_error);
}

TEST_CASE("digamma form equals the direct harmonic sum to 1e-20") {
    for (long n : {1L, 10L, 100L, 1234L, 10000L}) {
        auto [s0, spi] = theta_endpoint_slopes(n, 30);
        Real direct = real_zero(40);
        for (long m = 1; m <= n; ++m) direct += Real(1, 40) / (4 * m - 1);
        CHECK(abs(spi - direct) < 1e-20);
        CHECK(s0 == Real(static_cast<double>(n) * (2.0 * n + 1.0), 40));
    }
}

TEST_CASE("slope at pi grows like log(n)/4") {
    auto [s0, spi] = theta_endpoint_slopes(1000000, 25);
    double v = static_cast<double>(spi);
    double ln_n = std::log(1e6);
    CHECK(v / ln_n > 0.25);
    CHECK(v / ln_n < 0.30);
}
