// Order-of-magnitude crossover estimates for a hypothetical zero
// rho = 1/2 + t + iT violating the critical-line hypothesis: the n beyond
// which its contribution would emerge from the log n background, plus the
// endpoint slopes of Theta_n used in the asymptotic analysis.
//
// Thresholds neglect logarithms and constants relative to powers, so they
// are carried as (mantissa, decimal exponent), never at high precision.
#pragma once

#include <string>
#include <utility>

#include "liseq/bigfloat.hpp"

namespace liseq {

// Height up to which the critical line is verified by direct computation.
inline constexpr double kDefaultT0 = 2.4e12;

struct ViolationHypothesis {
    double t = 0.0;       // real offset, 0 < t < 1/2
    double T = 0.0;       // ordinate, > T0
    double T0 = kDefaultT0;
};

// throws std::domain_error unless 0 < t < 1/2 and T > T0 > 0
void validate(const ViolationHypothesis& h);

struct OrderEstimate {
    double log10_value = 0.0;
    double exponent_of_T = 0.0;  // nu in n ~ T^nu

    double mantissa() const;  // in [1, 10)
    long exponent10() const;
    std::string str() const;  // e.g. "7.96e61"
};

// n >~ T^{1 + 2/t}: raw crossover (|F_n| ~ 1 against the log n background).
OrderEstimate threshold_tn(const ViolationHypothesis& h);

// n >~ T^{1 + 1/t}: crossover against the period-2 averaged remainder's
// empirical 1/n decay.
OrderEstimate threshold_tni(const ViolationHypothesis& h);

// |F_n(rho)| ~ (2n/T)^t / (T^2 log n); n may be astronomically large, the
// evaluation is done in log space.
double signal_magnitude(const ViolationHypothesis& h, double n);

// (Theta_n'(0), Theta_n'(pi)):
//   Theta_n'(0)  = sum_{m=1..n} (4m-1)     = n(2n+1)      (exact)
//   Theta_n'(pi) = sum_{m=1..n} 1/(4m-1)   = [psi(n+3/4) + gamma + 3 log 2 - pi/2]/4
std::pair<Real, Real> theta_endpoint_slopes(long n, int digits);

}  // namespace liseq
