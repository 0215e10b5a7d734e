#include "liseq/zeros.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liseq/coefficients.hpp"
#include "liseq/complex_math.hpp"
#include "liseq/errors.hpp"

namespace liseq {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// A_{n,m} at working precision plus 1/A_{n0}, shared across many x.
struct FnContext {
    long n = 0;
    int wd = 0;
    Real inv_a0;
    std::vector<Real> coeff;
};

FnContext make_fn_context(long n, int digits) {
    FnContext ctx;
    ctx.n = n;
    ctx.wd = digits + 8;
    CoefficientRow row = coefficient_row(n);
    ctx.coeff.reserve(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) ctx.coeff.push_back(to_real(row.at(m), ctx.wd));
    ctx.inv_a0 = to_real(Rational(1) / row.at(0), ctx.wd);
    return ctx;
}

Real log_abs(const Real& a, const Real& b) {
    Real h = real_zero(static_cast<int>(a.precision()));
    mpfr_hypot(h.backend().data(), a.backend().data(), b.backend().data(), MPFR_RNDN);
    return log(h);
}

Real arg_of(const Real& a, const Real& b) {
    Real t = real_zero(static_cast<int>(a.precision()));
    mpfr_atan2(t.backend().data(), b.backend().data(), a.backend().data(), MPFR_RNDN);
    return t;
}

// principal-branch evaluation off the real axis
MpComplex fn_complex(const FnContext& ctx, const Real& xre, const Real& xim) {
    const int wd = ctx.wd;
    Real acc_re = real_zero(wd), acc_im = real_zero(wd);

    Real a = xre - 1;
    acc_re -= ctx.inv_a0 * log_abs(a, xim);
    acc_im -= ctx.inv_a0 * arg_of(a, xim);

    for (long m = 0; m <= ctx.n; ++m) {
        Real zre = xre - 2 * m;
        Real lr = log_abs(zre, xim);
        Real li = arg_of(zre, xim);
        const Real& c = ctx.coeff[static_cast<std::size_t>(m)];
        if (m % 2 == 0) {
            acc_re += c * lr;
            acc_im += c * li;
        } else {
            acc_re -= c * lr;
            acc_im -= c * li;
        }
    }
    if (ctx.n % 2 != 0) {
        acc_re = -acc_re;
        acc_im = -acc_im;
    }
    return {std::move(acc_re), std::move(acc_im)};
}

// real axis outside the cut: log moduli only (the i*pi parts cancel exactly
// through the first sum rule)
Real fn_real(const FnContext& ctx, const Real& x) {
    const int wd = ctx.wd;
    Real acc = real_zero(wd);
    acc -= ctx.inv_a0 * log(abs(x - 1));
    for (long m = 0; m <= ctx.n; ++m) {
        Real term = ctx.coeff[static_cast<std::size_t>(m)] * log(abs(x - 2 * m));
        if (m % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return (ctx.n % 2 != 0) ? Real(-acc) : acc;
}

double tail_bound_heuristic(long n, double gamma_next) {
    // per-pair tail terms behave like (n(2n+1)/2 + O(1))/gamma^2; integrate
    // against the density log(g/2pi)/2pi and double for safety
    const double two_pi = 2.0 * std::numbers::pi;
    double weight = 0.5 * static_cast<double>(n) * static_cast<double>(2 * n + 1) + 1.0;
    return weight * (std::log(gamma_next / two_pi) + 1.0) / (std::numbers::pi * gamma_next);
}

}  // namespace

ZeroTable load_zeros(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open zeros file: " + path.string());
    ZeroTable table;
    table.source = path.string();
    std::string line;
    long lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        double value = 0.0;
        std::size_t consumed = 0;
        try {
            value = std::stod(line, &consumed);
        } catch (const std::exception&) {
            throw data_error(path.string() + ":" + std::to_string(lineno) +
                             ": unparsable ordinate '" + line + "'");
        }
        for (std::size_t i = consumed; i < line.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(line[i])))
                throw data_error(path.string() + ":" + std::to_string(lineno) +
                                 ": trailing junk after ordinate");
        if (!(value > 0.0))
            throw data_error(path.string() + ":" + std::to_string(lineno) +
                             ": ordinate must be positive");
        if (value <= prev)
            throw data_error(path.string() + ":" + std::to_string(lineno) +
                             ": ordinates must be strictly ascending");
        table.ordinates.push_back(value);
        prev = value;
    }
    return table;
}

FnEvaluation f_n(const MpComplex& x, long n, int digits) {
    if (n < 1) throw std::domain_error("f_n: n must be >= 1");
    FnContext ctx = make_fn_context(n, digits);

    FnEvaluation ev;
    ev.n = n;
    ev.x = x;
    if (x.im == 0) {
        if (x.re >= 0 && x.re <= 2 * n)
            throw std::domain_error("f_n: x on the cut [0, " + std::to_string(2 * n) + "]");
        ev.value = {fn_real(ctx, x.re), real_zero(ctx.wd)};
        ev.branch_note = "real axis outside the cut; log moduli, branch terms cancel";
    } else {
        ev.value = fn_complex(ctx, x.re, x.im);
        ev.branch_note = "principal logs (single-valued off [0, 2n])";
    }
    return ev;
}

std::complex<double> f_n_asymptotic(std::complex<double> rho, long n) {
    if (n < 2) throw std::domain_error("f_n_asymptotic: n must be >= 2");
    if (rho.imag() == 0.0) {
        double nearest_even = 2.0 * std::round(rho.real() / 2.0);
        if (std::abs(rho.real() - nearest_even) < 1e-8)
            throw std::domain_error("f_n_asymptotic: pole of g at even integer");
    }
    const double ln_n = std::log(static_cast<double>(n));
    std::complex<double> lg = detail::log_g_factor(rho) - std::log(rho) - std::log(rho - 1.0) +
                              (rho - 0.5) * ln_n - std::log(ln_n);
    std::complex<double> value = std::exp(lg);
    return (n % 2 != 0) ? -value : value;
}

double f_n_modulus_estimate(std::complex<double> rho, double n) {
    if (!(n > 1.0)) throw std::domain_error("f_n_modulus_estimate: n must exceed 1");
    const double T = std::abs(rho.imag());
    if (!(T > 0.0)) throw std::domain_error("f_n_modulus_estimate: need Im rho != 0");
    const double t = rho.real() - 0.5;
    const double ln_n = std::log(n);
    // log-space evaluation; the quantities can span thousands of decades
    double log10_est = t * (std::log10(2.0) + std::log10(n) - std::log10(T)) -
                       2.0 * std::log10(T) - std::log10(ln_n);
    return std::pow(10.0, log10_est);
}

ZeroSumResult zero_sum_lambda(long n, const ZeroTable& table, std::size_t pairs, int digits) {
    if (n < 1) throw std::domain_error("zero_sum_lambda: n must be >= 1");
    if (pairs > table.count())
        throw data_error("zero_sum_lambda: table has " + std::to_string(table.count()) +
                         " ordinates, need " + std::to_string(pairs));

    FnContext ctx = make_fn_context(n, digits);
    Real half = Real(1, static_cast<unsigned>(ctx.wd)) / 2;
    Real sum = real_zero(ctx.wd);
    for (std::size_t k = 0; k < pairs; ++k) {
        Real gamma(table.ordinates[k], static_cast<unsigned>(ctx.wd));
        MpComplex f = fn_complex(ctx, half, gamma);
        sum += 2 * f.re;
    }

    ZeroSumResult result;
    result.value = std::move(sum);
    if (table.count() == 0) {
        result.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        double gamma_next =
            pairs < table.count() ? table.ordinates[pairs] : table.ordinates.back();
        result.tail_bound = tail_bound_heuristic(n, gamma_next);
    }
    return result;
}

double keiper_lambda(long n, const ZeroTable& table, std::size_t pairs) {
    if (n < 1) throw std::domain_error("keiper_lambda: n must be >= 1");
    if (pairs > table.count())
        throw data_error("keiper_lambda: table has " + std::to_string(table.count()) +
                         " ordinates, need " + std::to_string(pairs));
    double sum = 0.0;
    for (std::size_t k = 0; k < pairs; ++k) {
        std::complex<double> rho(0.5, table.ordinates[k]);
        std::complex<double> z = 1.0 - 1.0 / rho;
        sum += 2.0 * (1.0 - std::pow(z, static_cast<double>(n)).real());
    }
    return sum / static_cast<double>(n);
}

}  // namespace liseq
