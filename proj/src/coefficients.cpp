#include "liseq/coefficients.hpp"

#include <stdexcept>

namespace liseq {

CoefficientRow coefficient_row(long n) {
    if (n < 1) throw std::domain_error("coefficient_row: n must be >= 1");

    CoefficientRow row;
    row.n = n;
    row.values.reserve(static_cast<std::size_t>(n) + 1);

    // A_{n,0} = -2^{-2n} C(2n, n)  (equivalently -2^{-n}(2n-1)!!/n!)
    BigInt binom;
    mpz_bin_uiui(binom.backend().data(), static_cast<unsigned long>(2 * n),
                 static_cast<unsigned long>(n));
    BigInt denom = BigInt(1) << static_cast<unsigned>(2 * n);
    Rational a(-binom, denom);
    row.values.push_back(a);

    for (long m = 0; m < n; ++m) {
        // ratio = (2(n+m)+1)(n-m)(2m-1) / ((2m+1)^2 (m+1))
        Rational ratio(BigInt(2 * (n + m) + 1) * (n - m) * (2 * m - 1),
                       BigInt(2 * m + 1) * (2 * m + 1) * (m + 1));
        a *= ratio;
        row.values.push_back(a);
    }
    return row;
}

bool check_sum_rules(const CoefficientRow& row) {
    if (row.values.size() != static_cast<std::size_t>(row.n) + 1) return false;
    const Rational& a0 = row.values[0];
    if (a0 == 0) return false;

    Rational alternating(0), weighted(0);
    for (long m = 0; m <= row.n; ++m) {
        const Rational& a = row.values[static_cast<std::size_t>(m)];
        if (m % 2 == 0) {
            alternating += a;
            weighted += a * m;
        } else {
            alternating -= a;
            weighted -= a * m;
        }
    }
    Rational inv_a0 = Rational(1) / a0;
    int parity = (row.n % 2 == 0) ? 1 : -1;
    return alternating == inv_a0 && 2 * weighted == parity + inv_a0;
}

}  // namespace liseq
