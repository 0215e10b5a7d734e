// Exact rational combinatorial coefficients A_{n,m} and their sum rules.
//
//   A_{n,m} = 2^{-2n}/(2m-1) * C(2(n+m), n+m) * C(n+m, 2m)   (m = 0..n)
//
// Rows are built by the exact ratio recurrence; all arithmetic is rational,
// so the cancellation of the final alternating sum is confined to the float
// stage and the sum rules are exact identities here.
#pragma once

#include <vector>

#include "liseq/bigfloat.hpp"

namespace liseq {

struct CoefficientRow {
    long n = 0;
    std::vector<Rational> values;  // A_{n,0} .. A_{n,n}

    const Rational& at(long m) const { return values[static_cast<std::size_t>(m)]; }
};

// Row via A_{n,0} = -2^{-n}(2n-1)!!/n! and the ratio recurrence
//   A_{n,m+1}/A_{n,m} = 4(n+m+1/2)(n-m)(2m-1) / ((2m+1)^2 (2m+2)).
CoefficientRow coefficient_row(long n);

// Both identities, exactly in rational arithmetic:
//   sum_{m=0..n} (-1)^m A_{nm}      = 1/A_{n0}
//   2 sum_{m=1..n} (-1)^m A_{nm} m  = (-1)^n + 1/A_{n0}
// false signals an implementation bug (or a corrupted row).
bool check_sum_rules(const CoefficientRow& row);

}  // namespace liseq
