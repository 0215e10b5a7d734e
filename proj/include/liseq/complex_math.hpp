// Double-precision complex special functions for the asymptotic estimates:
// log Gamma via Stirling with argument shifting, a log(sin) that stays
// finite for large |Im|, and the combination
//
//   g(x) = sqrt(pi) 2^{x-1} / (sin(pi x/2) Gamma(x))
//
// assembled in log space so huge sin/Gamma factors cancel before exp.
#pragma once

#include <complex>

namespace liseq {

namespace detail {

// C \ (-inf, 0]; value mod 2*pi*i (callers exponentiate)
std::complex<double> lgamma_complex(std::complex<double> z);

// log sin(w), stable for |Im w| large; value mod 2*pi*i
std::complex<double> log_sin(std::complex<double> w);

std::complex<double> log_g_factor(std::complex<double> x);

}  // namespace detail

// Poles at positive even integers; throws std::domain_error within 1e-8 of
// any even integer (at nonpositive even integers the log-space form is
// indeterminate even though g itself has a finite limit there).
std::complex<double> g_factor(std::complex<double> x);

}  // namespace liseq
