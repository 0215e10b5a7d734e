// Centered variant with basepoint x = 1/2: in the variable
// r = sqrt(1 + (2x-1)^2/w), the grid points x = 2m map to
// r_m = sqrt(1 + (4m-1)^2/w) and the residue evaluation gives
//
//   Lambda0_n(w) = sum_{m=1..n} 2/(r_m+1)^2
//                  * prod_{k=0..n}(r_m+r_k) / prod_{k!=m}(r_m-r_k)
//                  * log 2xi(2m).
//
// Valid for 0 < w < 4 min|Im rho|^2 ~ 799.1618 (all critical-line zeros must
// pull back to the unit circle). Grows like sqrt(w)(log n + C).
//
// The coefficients cancel as violently as the A_{nm} (the same 0.766 n digit
// profile), so evaluations reuse the precision plan of the main sequence.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liseq/bigfloat.hpp"
#include "liseq/special_values.hpp"

namespace liseq {

inline constexpr double kWTildeMax = 799.1618;  // 4 * min_rho |Im rho|^2

struct CenteredConfig {
    long n = 0;
    int digits = 0;
    Real w_tilde;
    std::vector<Real> r;  // r_0 .. r_n, strictly increasing, all > 1
};

// Validates 0 < w < kWTildeMax and that the r_m came out strictly increasing.
CenteredConfig centered_config(long n, const std::string& w_tilde_decimal, int digits);

// Direct product evaluation at the config's working precision. The table
// must cover m <= n at >= `digits`.
Real centered_lambda(long n, const CenteredConfig& cfg, const XiLogTable& table, int digits);

struct CenteredRow {
    long n = 0;
    Real value;      // Lambda0_n(w)
    Real remainder;  // value - sqrt(w)(log n + C)
};

// Scan [from, to] sharing one table; the per-m coefficients are extended
// incrementally in n, so the whole scan costs about one evaluation at `to`.
// from > to yields an empty vector.
std::vector<CenteredRow> centered_scan(long from, long to, const std::string& w_tilde_decimal,
                                       int target_digits, const XiLogTable* table = nullptr,
                                       unsigned threads = 0);

// CSV schema: n,centered_lambda,remainder
void write_centered_csv(std::ostream& out, const std::vector<CenteredRow>& rows,
                        int print_digits);

}  // namespace liseq
