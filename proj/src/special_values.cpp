#include "liseq/special_values.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "liseq/errors.hpp"
#include "liseq/parallel.hpp"

namespace liseq {

namespace {

constexpr int kGuardDigits = 12;
constexpr double kSeriesLog10Budget = 4.3;  // at most ~2*10^4 series terms

Real zeta_even_series(long m, int wd, long kmax) {
    Real sum = real_from(1, wd);
    BigInt kpow;
    for (long k = 2; k <= kmax; ++k) {
        mpz_ui_pow_ui(kpow.backend().data(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(2 * m));
        sum += 1 / to_real(kpow, wd);
    }
    return sum;
}

Real factorial_log(long k, int wd) {
    // ln k!, exact factorial then one log
    BigInt f;
    mpz_fac_ui(f.backend().data(), static_cast<unsigned long>(k));
    return log_of_bigint(f, wd);
}

Real odd_double_factorial_log(long m, int wd) {
    // ln (2m-3)!! for m >= 1; (-1)!! = 1 by the gamma-extension convention
    if (m == 1) return real_zero(wd);
    BigInt df;
    mpz_2fac_ui(df.backend().data(), static_cast<unsigned long>(2 * m - 3));
    return log_of_bigint(df, wd);
}

std::filesystem::path cache_file(const std::string& dir, long m, int digits) {
    return std::filesystem::path(dir) /
           ("xilog_" + std::to_string(m) + "_" + std::to_string(digits) + ".txt");
}

bool try_read_cache(const std::string& dir, long m, int digits, int wd, Real& out) {
    std::ifstream in(cache_file(dir, m, digits));
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line.empty()) return false;
    try {
        out = real_from(line, wd);
    } catch (...) {
        return false;  // corrupt cache entry: fall through and recompute
    }
    return true;
}

void write_cache(const std::string& dir, long m, int digits, const Real& value) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto path = cache_file(dir, m, digits);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        // entries carry digits + kGuardDigits of binary precision; a few more
        // decimals make the decimal form round-trip bit-exactly
        out << format_real(value, digits + kGuardDigits + 6) << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace

Real zeta_even(long m, int digits) {
    if (m < 1) throw std::domain_error("zeta_even: m must be >= 1");
    if (digits < 1) throw std::domain_error("zeta_even: digits must be >= 1");
    const int wd = digits + kGuardDigits;

    // tail bound: sum_{k > kmax} k^{-2m} < kmax^{1-2m}/(2m-1) < 10^-digits
    // as soon as kmax > (10^digits/(2m-1))^{1/(2m-1)}
    const double log10_kmax =
        (static_cast<double>(digits) - std::log10(static_cast<double>(2 * m - 1))) /
        static_cast<double>(2 * m - 1);
    if (log10_kmax <= kSeriesLog10Budget) {
        long kmax = static_cast<long>(std::floor(std::pow(10.0, std::max(log10_kmax, 0.0)))) + 1;
        return zeta_even_series(m, wd, kmax);
    }

    Real z = real_zero(wd);
    mpfr_zeta_ui(z.backend().data(), static_cast<unsigned long>(2 * m), MPFR_RNDN);
    return z;  // already at wd
}

Real log_2xi_even(long m, int digits, XiLogRoute route) {
    if (m < 0) throw std::domain_error("log_2xi_even: m must be >= 0");
    if (m == 0) return real_zero(digits);  // 2xi(0) = 1 exactly
    const int wd = digits + kGuardDigits;

    if (route == XiLogRoute::gamma_zeta) {
        Real v = log_uint(static_cast<unsigned long>(2 * m), wd);
        v += log_uint(static_cast<unsigned long>(2 * m - 1), wd);
        v -= m * const_ln_pi(wd);
        v += factorial_log(m - 1, wd);  // ln Gamma(m)
        v += log(zeta_even(m, digits + 4));
        return round_to(v, wd);  // pin the precision (ops promote to max operand)
    }

    // bernoulli route: log|B_2m| - log (2m-3)!! + m log 2pi, exact rationals
    Rational b = bernoulli_even_exact(m);
    Real v = log_of_bigint(abs(numerator(b)), wd) - log_of_bigint(denominator(b), wd);
    v -= odd_double_factorial_log(m, wd);
    v += m * const_ln_2pi(wd);
    return round_to(v, wd);
}

Real log_bernoulli_even(long m, int digits) {
    if (m < 1) throw std::domain_error("log_bernoulli_even: m must be >= 1");
    const int wd = digits + kGuardDigits;
    Real v = const_ln2(wd);
    v += factorial_log(2 * m, wd);
    v += log(zeta_even(m, digits + 4));
    v -= 2 * m * const_ln_2pi(wd);
    return round_to(v, wd);
}

std::vector<BigInt> tangent_numbers(long count) {
    if (count < 1) return {};
    std::vector<BigInt> t(static_cast<std::size_t>(count));
    t[0] = 1;
    for (long k = 1; k < count; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)] * k;
    for (long k = 1; k < count; ++k)
        for (long j = k; j < count; ++j) {
            auto& tj = t[static_cast<std::size_t>(j)];
            tj = (j - k) * t[static_cast<std::size_t>(j - 1)] + (j - k + 2) * tj;
        }
    return t;
}

namespace {

Rational bernoulli_from_tangent(long m, const BigInt& tangent_m) {
    BigInt four_m = BigInt(1) << static_cast<unsigned>(2 * m);  // 4^m
    Rational b(BigInt(2 * m) * tangent_m, four_m * (four_m - 1));
    return (m % 2 == 1) ? b : -b;
}

}  // namespace

Rational bernoulli_even_exact(long m) {
    if (m < 1) throw std::domain_error("bernoulli_even_exact: m must be >= 1");
    if (m > kBernoulliExactCap)
        throw std::domain_error("bernoulli_even_exact: m = " + std::to_string(m) +
                                " beyond the exact-rational cap " +
                                std::to_string(kBernoulliExactCap) + "; use the float route");
    auto t = tangent_numbers(m);
    return bernoulli_from_tangent(m, t.back());
}

std::vector<Rational> bernoulli_even_exact_list(long m_max) {
    if (m_max < 1) return {};
    if (m_max > kBernoulliExactCap)
        throw std::domain_error("bernoulli_even_exact_list: m_max beyond cap");
    auto t = tangent_numbers(m_max);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(m_max));
    for (long m = 1; m <= m_max; ++m)
        out.push_back(bernoulli_from_tangent(m, t[static_cast<std::size_t>(m - 1)]));
    return out;
}

XiLogTable::XiLogTable(long n_max, int digits, XiLogRoute route, std::vector<Real> entries)
    : n_max_(n_max), digits_(digits), route_(route), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(n_max_) + 1)
        throw std::invalid_argument("XiLogTable: entry count does not match n_max");
    for (long m = 1; m <= n_max_; ++m)
        if (entries_[static_cast<std::size_t>(m)] <= 0)
            throw data_error("XiLogTable: nonpositive entry at m = " + std::to_string(m));
}

const Real& XiLogTable::entry(long m) const {
    if (m < 0 || m > n_max_)
        throw std::domain_error("XiLogTable::entry: m = " + std::to_string(m) +
                                " outside table range [0, " + std::to_string(n_max_) + "]");
    return entries_[static_cast<std::size_t>(m)];
}

std::string cache_dir_from_env() {
    const char* dir = std::getenv("LISEQ_CACHE_DIR");
    return dir ? std::string(dir) : std::string();
}

XiLogTable build_xilog_table(long n_max, int digits, XiLogRoute route,
                             const std::string& cache_dir, unsigned threads) {
    if (n_max < 0) throw std::domain_error("build_xilog_table: n_max must be >= 0");
    if (route == XiLogRoute::bernoulli && n_max > kBernoulliExactCap)
        throw std::domain_error("build_xilog_table: bernoulli route capped at m <= " +
                                std::to_string(kBernoulliExactCap));

    std::vector<Real> entries(static_cast<std::size_t>(n_max) + 1);
    entries[0] = real_zero(digits);
    const bool use_cache = route == XiLogRoute::gamma_zeta && !cache_dir.empty();
    const int wd = digits + kGuardDigits;

    if (route == XiLogRoute::bernoulli) {
        // One triangle for the whole table; entries then cost a few logs each.
        auto tangents = tangent_numbers(n_max);
        detail::parallel_for(1, n_max + 1, threads, [&](long m) {
            Rational b = bernoulli_from_tangent(m, tangents[static_cast<std::size_t>(m - 1)]);
            Real v = log_of_bigint(abs(numerator(b)), wd) - log_of_bigint(denominator(b), wd);
            v -= odd_double_factorial_log(m, wd);
            v += m * const_ln_2pi(wd);
            entries[static_cast<std::size_t>(m)] = round_to(v, wd);
        });
        return XiLogTable(n_max, digits, route, std::move(entries));
    }

    detail::parallel_for(1, n_max + 1, threads, [&](long m) {
        Real v;
        if (use_cache && try_read_cache(cache_dir, m, digits, wd, v)) {
            entries[static_cast<std::size_t>(m)] = std::move(v);
            return;
        }
        v = log_2xi_even(m, digits, XiLogRoute::gamma_zeta);
        if (use_cache) write_cache(cache_dir, m, digits, v);
        entries[static_cast<std::size_t>(m)] = std::move(v);
    });
    return XiLogTable(n_max, digits, route, std::move(entries));
}

}  // namespace liseq
