#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "liseq/bigfloat.hpp"
#include "liseq/complex_math.hpp"
#include "liseq/special_values.hpp"
#include "oracles.hpp"

using namespace liseq;

namespace {

Real expect(const char* decimal, int digits) { return real_from(decimal, digits); }

bool close(const Real& a, const Real& b, int digits) {
    return abs(a - b) < pow(Real(10, 20), -digits);
}

// test-only complex zeta via Euler-Maclaurin (double precision), valid for
// moderate |s| away from s = 1; independent of the library's real kernels
std::complex<double> zeta_em(std::complex<double> s) {
    constexpr double B[] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,  -1.0 / 30,
                            5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    const int N = 40;
    std::complex<double> z = 0.0;
    for (int j = 1; j < N; ++j) z += std::pow(static_cast<double>(j), -s);
    z += std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
    z += 0.5 * std::pow(static_cast<double>(N), -s);
    std::complex<double> poch = s;
    double fact = 2.0;
    z += B[0] / fact * poch * std::pow(static_cast<double>(N), -s - 1.0);
    for (int k = 2; k <= 8; ++k) {
        poch *= (s + (2.0 * k - 3.0)) * (s + (2.0 * k - 2.0));
        fact *= (2.0 * k) * (2.0 * k - 1.0);
        z += B[k - 1] / fact * poch * std::pow(static_cast<double>(N), -s - (2.0 * k - 1.0));
    }
    return z;
}

std::complex<double> two_xi(std::complex<double> x) {
    return x * (x - 1.0) * std::exp(-0.5 * x * std::log(M_PI)) *
           std::exp(detail::lgamma_complex(0.5 * x)) * zeta_em(x);
}

}  // namespace

TEST_CASE("zeta at small even integers") {
    CHECK(close(zeta_even(1, 35), expect(oracle::kZeta2, 40), 34));
    CHECK(close(zeta_even(2, 35), expect(oracle::kZeta4, 40), 34));
    CHECK_THROWS_AS(zeta_even(0, 20), std::domain_error);
}

TEST_CASE("zeta_even(50, 30): the series needs exactly two terms") {
    // tail bound oracle: 1 + 2^-100 + 3^-100 + 4^-100 at 40 digits
    Real direct = real_from(1, 140) + pow(Real(2, 140), -100) + pow(Real(3, 140), -100) +
                  pow(Real(4, 140), -100);
    CHECK(close(zeta_even(50, 30), direct, 30));
}

TEST_CASE("zeta decreases monotonically to 1") {
    Real prev = zeta_even(1, 30);
    for (long m = 2; m <= 40; ++m) {
        Real z = zeta_even(m, 30);
        CHECK(z < prev);
        CHECK(z > 1);
        prev = z;
    }
    CHECK(abs(zeta_even(40, 30) - 1) < 1e-24);
}

TEST_CASE("series and mpfr kernels agree across the crossover") {
    // m around the series-budget boundary at these digit counts
    for (int digits : {30, 200}) {
        for (long m : {2L, 5L, 24L, 47L, 120L}) {
            Real a = zeta_even(m, digits);
            Real z = real_zero(digits + 12);
            mpfr_zeta_ui(z.backend().data(), static_cast<unsigned long>(2 * m), MPFR_RNDN);
            CHECK(close(a, z, digits));
        }
    }
}

TEST_CASE("log 2xi at m = 0, 1, 2") {
    Real zero = log_2xi_even(0, 30);
    CHECK(zero == 0);  // exactly
    CHECK(close(log_2xi_even(1, 35), expect(oracle::kLog2Xi2, 40), 34));
    CHECK(close(log_2xi_even(2, 35), expect(oracle::kLog2Xi4, 40), 34));
    CHECK_THROWS_AS(log_2xi_even(-1, 20), std::domain_error);
}

TEST_CASE("gamma_zeta and bernoulli routes agree to digits - 5, m <= 200") {
    const int digits = 40;
    for (long m = 1; m <= 200; m = (m < 12) ? m + 1 : m + 13) {
        Real a = log_2xi_even(m, digits, XiLogRoute::gamma_zeta);
        Real b = log_2xi_even(m, digits, XiLogRoute::bernoulli);
        CHECK(close(a, b, digits - 5));
    }
}

TEST_CASE("table entries are positive and match single evaluations") {
    XiLogTable table = build_xilog_table(60, 30, XiLogRoute::gamma_zeta, "");
    CHECK(table.n_max() == 60);
    CHECK(table.digits() == 30);
    CHECK(table.entry(0) == 0);
    for (long m = 1; m <= 60; ++m) {
        CHECK(table.entry(m) > 0);
        CHECK(close(table.entry(m), log_2xi_even(m, 30), 29));
    }
    CHECK_THROWS_AS(table.entry(61), std::domain_error);
}

TEST_CASE("bernoulli-route table agrees with the default one") {
    XiLogTable a = build_xilog_table(40, 30, XiLogRoute::gamma_zeta, "");
    XiLogTable b = build_xilog_table(40, 30, XiLogRoute::bernoulli, "");
    for (long m = 1; m <= 40; ++m) CHECK(close(a.entry(m), b.entry(m), 25));
}

TEST_CASE("exact Bernoulli rationals") {
    CHECK(bernoulli_even_exact(1) == Rational(1, 6));
    CHECK(bernoulli_even_exact(2) == Rational(-1, 30));
    CHECK(bernoulli_even_exact(3) == Rational(1, 42));
    CHECK(bernoulli_even_exact(4) == Rational(-1, 30));
    CHECK(bernoulli_even_exact(5) == Rational(5, 66));
    CHECK(bernoulli_even_exact(6) == Rational(-691, 2730));
    CHECK(bernoulli_even_exact(7) == Rational(7, 6));
    auto list = bernoulli_even_exact_list(7);
    CHECK(list.size() == 7);
    CHECK(list[5] == Rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli_even_exact(kBernoulliExactCap + 1), std::domain_error);
}

TEST_CASE("tangent numbers, first few") {
    auto t = tangent_numbers(5);
    CHECK(t[0] == 1);
    CHECK(t[1] == 2);
    CHECK(t[2] == 16);
    CHECK(t[3] == 272);
    CHECK(t[4] == 7936);
}

TEST_CASE("log_bernoulli_even against exact rationals") {
    CHECK(close(log_bernoulli_even(1, 35), expect(oracle::kLnB2, 40), 34));
    CHECK(close(log_bernoulli_even(2, 35), expect(oracle::kLnB4, 40), 34));
    CHECK(close(log_bernoulli_even(6, 35), expect(oracle::kLnB12, 40), 34));
    // property: matches log of the exact rational for larger m too
    for (long m : {20L, 75L}) {
        Rational b = bernoulli_even_exact(m);
        Real exact = log(abs(to_real(b, 60)));
        CHECK(close(log_bernoulli_even(m, 40), exact, 39));
    }
}

TEST_CASE("functional equation spot check at x = 2.5 + 0.3i") {
    // diagnostic-grade: double-precision complex Euler-Maclaurin on both sides
    std::complex<double> x(2.5, 0.3);
    auto a = two_xi(x);
    auto b = two_xi(1.0 - x);
    CHECK(std::abs(a - b) < 1e-7);
    CHECK(std::abs(a - std::complex<double>(oracle::k2XiProbeRe, oracle::k2XiProbeIm)) < 1e-9);
}

TEST_CASE("cache round-trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "liseq_cache_test";
    fs::remove_all(dir);

    XiLogTable first = build_xilog_table(12, 25, XiLogRoute::gamma_zeta, dir.string());
    CHECK(fs::exists(dir / "xilog_12_25.txt"));
    XiLogTable second = build_xilog_table(12, 25, XiLogRoute::gamma_zeta, dir.string());
    for (long m = 1; m <= 12; ++m) CHECK(first.entry(m) == second.entry(m));

    // corrupt one entry; the builder must recover by recomputation
    {
        std::ofstream out(dir / "xilog_7_25.txt");
        out << "not-a-number\n";
    }
    XiLogTable third = build_xilog_table(12, 25, XiLogRoute::gamma_zeta, dir.string());
    CHECK(close(third.entry(7), first.entry(7), 24));
    fs::remove_all(dir);
}
