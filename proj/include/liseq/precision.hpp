// Cancellation model for the alternating sums: the summand magnitudes peak
// near m = n/sqrt(2), costing about 0.766*n decimal digits, and every other
// module sizes its working precision from the plan produced here.
#pragma once

#include <vector>

namespace liseq {

// log10(3 + 2*sqrt(2)): digits-per-n lost at the peak summand.
inline constexpr double kVarpiPeakRatio = 0.76555137067572616;

// Location of the peak, m/n = 1/sqrt(2).
inline constexpr double kVarpiPeakArg = 0.70710678118654752;

struct PrecisionPlan {
    long n = 0;
    int working_digits = 0;
    int guard_digits = 0;
    double peak_ratio = kVarpiPeakRatio;
    // profile[m] = digits demanded by summand m (index 0..n, profile[0] = 0).
    std::vector<int> profile;

    int profile_at(long m) const;
};

// varpi(r) = -2 r log10 r + (1+r) log10(1+r) - (1-r) log10(1-r), the limiting
// per-n digit requirement at m = r*n. Continuous on [0,1], endpoints by the
// x log x -> 0 limit. Throws std::domain_error outside [0,1].
double varpi(double r);

// Working-precision plan for Lambda_n at `target_digits` of end accuracy.
//   working = ceil(peak*n) + guard,  guard = target + 15 + ceil(log10(n+1)).
// The guard covers ~1 ulp of rounding per bignum operation across the sum.
// The plan is advisory; callers may override working_digits upward.
PrecisionPlan plan_for(long n, int target_digits);

}  // namespace liseq
