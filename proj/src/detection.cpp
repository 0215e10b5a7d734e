#include "liseq/detection.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace liseq {

void validate(const ViolationHypothesis& h) {
    if (!(h.t > 0.0 && h.t < 0.5))
        throw std::domain_error("hypothesis: t must lie in (0, 1/2), got " + std::to_string(h.t));
    if (!(h.T0 > 0.0)) throw std::domain_error("hypothesis: T0 must be positive");
    if (!(h.T > h.T0))
        throw std::domain_error("hypothesis: T = " + std::to_string(h.T) +
                                " must exceed the confirmed height T0 = " + std::to_string(h.T0));
}

double OrderEstimate::mantissa() const {
    return std::pow(10.0, log10_value - std::floor(log10_value));
}

long OrderEstimate::exponent10() const { return static_cast<long>(std::floor(log10_value)); }

std::string OrderEstimate::str() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3ge%ld", mantissa(), exponent10());
    return buf;
}

OrderEstimate threshold_tn(const ViolationHypothesis& h) {
    validate(h);
    OrderEstimate e;
    e.exponent_of_T = 1.0 + 2.0 / h.t;
    e.log10_value = e.exponent_of_T * std::log10(h.T);
    return e;
}

OrderEstimate threshold_tni(const ViolationHypothesis& h) {
    validate(h);
    OrderEstimate e;
    e.exponent_of_T = 1.0 + 1.0 / h.t;
    e.log10_value = e.exponent_of_T * std::log10(h.T);
    return e;
}

double signal_magnitude(const ViolationHypothesis& h, double n) {
    validate(h);
    if (!(n > 1.0)) throw std::domain_error("signal_magnitude: n must exceed 1");
    const double log10_n = std::log10(n);
    const double ln_n = log10_n * std::log(10.0);
    double log10_est = h.t * (std::log10(2.0) + log10_n - std::log10(h.T)) -
                       2.0 * std::log10(h.T) - std::log10(ln_n);
    return std::pow(10.0, log10_est);
}

std::pair<Real, Real> theta_endpoint_slopes(long n, int digits) {
    if (n < 1) throw std::domain_error("theta_endpoint_slopes: n must be >= 1");
    const int wd = digits + 8;

    Real slope0 = to_real(BigInt(n) * (2 * n + 1), wd);

    Real arg = real_from(4 * n + 3, wd) / 4;  // n + 3/4
    Real psi = real_zero(wd);
    mpfr_digamma(psi.backend().data(), arg.backend().data(), MPFR_RNDN);
    Real slope_pi = (psi + const_euler(wd) + 3 * const_ln2(wd) - const_pi(wd) / 2) / 4;
    return {std::move(slope0), std::move(slope_pi)};
}

}  // namespace liseq
