#include "liseq/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace liseq {

namespace {

double xlog10x(double x) { return x > 0.0 ? x * std::log10(x) : 0.0; }

int ceil_log10(long k) {
    // smallest g with 10^g >= k, integer arithmetic
    int g = 0;
    long p = 1;
    while (p < k) {
        p = (p > (1L << 60) / 10) ? k : p * 10;
        ++g;
    }
    return g;
}

}  // namespace

double varpi(double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("varpi: r = " + std::to_string(r) + " outside [0,1]");
    return -2.0 * xlog10x(r) + xlog10x(1.0 + r) - xlog10x(1.0 - r);
}

int PrecisionPlan::profile_at(long m) const {
    if (m < 0 || m > n) throw std::domain_error("profile_at: m outside [0,n]");
    return profile[static_cast<std::size_t>(m)];
}

PrecisionPlan plan_for(long n, int target_digits) {
    if (n < 1) throw std::domain_error("plan_for: n must be >= 1");
    if (target_digits < 1) throw std::domain_error("plan_for: target_digits must be >= 1");

    PrecisionPlan plan;
    plan.n = n;
    plan.guard_digits = target_digits + 15 + ceil_log10(n + 1);
    plan.working_digits =
        static_cast<int>(std::ceil(kVarpiPeakRatio * static_cast<double>(n))) + plan.guard_digits;
    plan.profile.resize(static_cast<std::size_t>(n) + 1);
    plan.profile[0] = 0;
    for (long m = 1; m <= n; ++m) {
        double w = varpi(static_cast<double>(m) / static_cast<double>(n));
        plan.profile[static_cast<std::size_t>(m)] = static_cast<int>(std::ceil(w * n));
    }
    return plan;
}

}  // namespace liseq
