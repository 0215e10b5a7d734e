#include "liseq/bigfloat.hpp"

#include <sstream>

namespace liseq {

Real real_from(const std::string& decimal, int digits) {
    return Real(decimal, static_cast<unsigned>(digits));
}

Real to_real(const Rational& q, int digits) {
    Real x = real_zero(digits);
    mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
    return x;
}

Real to_real(const BigInt& z, int digits) {
    Real x = real_zero(digits);
    mpfr_set_z(x.backend().data(), z.backend().data(), MPFR_RNDN);
    return x;
}

Real round_to(const Real& x, int digits) {
    Real y = real_zero(digits);
    mpfr_set(y.backend().data(), x.backend().data(), MPFR_RNDN);
    return y;
}

Real const_pi(int digits) {
    Real x = real_zero(digits);
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

Real const_euler(int digits) {
    Real x = real_zero(digits);
    mpfr_const_euler(x.backend().data(), MPFR_RNDN);
    return x;
}

Real const_ln2(int digits) {
    Real x = real_zero(digits);
    mpfr_const_log2(x.backend().data(), MPFR_RNDN);
    return x;
}

Real const_ln_pi(int digits) { return log(const_pi(digits + 2)); }

Real const_ln_2pi(int digits) {
    Real two_pi = 2 * const_pi(digits + 2);
    return log(two_pi);
}

Real log_uint(unsigned long k, int digits) {
    Real x = real_zero(digits);
    mpfr_log_ui(x.backend().data(), k, MPFR_RNDN);
    return x;
}

Real log_of_bigint(const BigInt& z, int digits) {
    // Round the integer in with a little headroom so the log keeps full
    // accuracy even when z has far more bits than the target precision.
    Real x(0, static_cast<unsigned>(digits + 10));
    mpfr_set_z(x.backend().data(), z.backend().data(), MPFR_RNDN);
    return round_to(log(x), digits);
}

std::string format_real(const Real& x, int digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace liseq
