#include "liseq/complex_math.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liseq {

namespace detail {

namespace {
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// B_{2k}/(2k(2k-1)) for the Stirling tail
constexpr double kStirling[] = {
    1.0 / 12,       -1.0 / 360,     1.0 / 1260,      -1.0 / 1680,
    1.0 / 1188,     -691.0 / 360360, 1.0 / 156,      -3617.0 / 122400,
};
}  // namespace

cd lgamma_complex(cd z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("lgamma_complex: pole at nonpositive integer");
    cd shift(0.0, 0.0);
    while (std::abs(z) < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cd lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    cd zpow = z;
    const cd z2 = z * z;
    for (double c : kStirling) {
        lg += c / zpow;
        zpow *= z2;
    }
    return lg - shift;
}

cd log_sin(cd w) {
    const double b = w.imag();
    if (std::abs(b) <= 20.0) return std::log(std::sin(w));
    // sin w = (e^{iw} - e^{-iw}) / 2i; one exponential dominates
    const cd iw(-b, w.real());  // i*w
    if (b > 0.0) {
        // sin w ~ -e^{-iw}/(2i) = (i/2) e^{-iw}
        return -iw + std::log(cd(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * iw));
    }
    return iw + std::log(cd(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * iw));
}

cd log_g_factor(cd x) {
    return 0.5 * std::log(kPi) + (x - 1.0) * std::log(2.0) - log_sin(0.5 * kPi * x) -
           lgamma_complex(x);
}

}  // namespace detail

std::complex<double> g_factor(std::complex<double> x) {
    if (x.imag() == 0.0) {
        double nearest_even = 2.0 * std::round(x.real() / 2.0);
        if (std::abs(x.real() - nearest_even) < 1e-8)
            throw std::domain_error("g_factor: pole of g at even integer x = " +
                                    std::to_string(nearest_even));
    }
    return std::exp(detail::log_g_factor(x));
}

}  // namespace liseq
