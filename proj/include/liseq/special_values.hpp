// High-precision special values: zeta at even integers, log 2xi(2m),
// log |B_2m|, and the exact Bernoulli rationals used for cross-checks.
//
// 2xi(x) = x(x-1) pi^{-x/2} Gamma(x/2) zeta(x), so at x = 2m
//
//   log 2xi(2m) = log(2m) + log(2m-1) - m log pi + log (m-1)! + log zeta(2m)
//
// (the gamma_zeta route; factorials exact, one log each). The bernoulli
// route evaluates the same value as log|B_2m| - log (2m-3)!! + m log 2pi
// from exact Bernoulli rationals and is kept as an independent cross-check
// for moderate m, where the exact rationals are still cheap.
//
// Returned values carry a few digits beyond the requested count; `digits`
// is the accuracy contract (absolute error < 10^-digits), not the storage
// precision.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "liseq/bigfloat.hpp"

namespace liseq {

enum class XiLogRoute { gamma_zeta, bernoulli };

class XiLogTable {
  public:
    XiLogTable() = default;
    XiLogTable(long n_max, int digits, XiLogRoute route, std::vector<Real> entries);

    // log 2xi(2m); entry(0) == 0 exactly.
    const Real& entry(long m) const;
    long n_max() const { return n_max_; }
    int digits() const { return digits_; }
    XiLogRoute route() const { return route_; }

  private:
    long n_max_ = -1;
    int digits_ = 0;
    XiLogRoute route_ = XiLogRoute::gamma_zeta;
    std::vector<Real> entries_;
};

// zeta(2m) with absolute error < 10^-digits. Uses the ascending Dirichlet
// series with the rigorous tail bound k_max^{1-2m}/(2m-1) < 10^-digits when
// that needs at most ~2*10^4 terms; below that crossover (small m at high
// digits, where the series would need up to 10^digits terms) it delegates
// to mpfr_zeta_ui.
Real zeta_even(long m, int digits);

// log 2xi(2m) to 10^-digits; m = 0 returns exactly 0.
Real log_2xi_even(long m, int digits, XiLogRoute route = XiLogRoute::gamma_zeta);

// ln |B_2m| via |B_2m| = 2 (2m)! zeta(2m) / (2pi)^{2m}.
Real log_bernoulli_even(long m, int digits);

// Tangent numbers T_1..T_count (integer Seidel-style triangle).
std::vector<BigInt> tangent_numbers(long count);

// Exact B_2m = (-1)^{m-1} 2m T_m / (4^m (4^m - 1)). The triangle is O(m^2)
// big-integer work, so these are capped (throws std::domain_error beyond).
Rational bernoulli_even_exact(long m);
std::vector<Rational> bernoulli_even_exact_list(long m_max);
inline constexpr long kBernoulliExactCap = 3000;

// $LISEQ_CACHE_DIR, or empty (caching disabled).
std::string cache_dir_from_env();

// Table of log 2xi(2m), m = 0..n_max. gamma_zeta entries are persisted to
// cache_dir as one decimal string per file, named xilog_<m>_<digits>.txt;
// the bernoulli route is never cached. threads = 0 means all cores.
XiLogTable build_xilog_table(long n_max, int digits,
                             XiLogRoute route = XiLogRoute::gamma_zeta,
                             const std::string& cache_dir = cache_dir_from_env(),
                             unsigned threads = 0);

}  // namespace liseq
