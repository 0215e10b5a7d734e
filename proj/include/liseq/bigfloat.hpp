// Arbitrary-precision number types and context helpers.
//
// Real is an MPFR-backed float whose precision is carried per value; every
// routine in this library that produces a Real takes an explicit decimal
// digit count and constructs its results at that precision. Nothing depends
// on the boost global default precision.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <string>

namespace liseq {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// Fresh zero carrying `digits` decimal digits of working precision.
inline Real real_zero(int digits) { return Real(0, static_cast<unsigned>(digits)); }

inline Real real_from(long v, int digits) { return Real(v, static_cast<unsigned>(digits)); }

Real real_from(const std::string& decimal, int digits);

// Round-to-nearest conversions at the requested precision.
Real to_real(const Rational& q, int digits);
Real to_real(const BigInt& z, int digits);

// x rounded to a fresh value of the given precision.
Real round_to(const Real& x, int digits);

// Classic constants, computed by MPFR at the requested precision.
Real const_pi(int digits);
Real const_euler(int digits);
Real const_ln2(int digits);
Real const_ln_pi(int digits);
Real const_ln_2pi(int digits);

// ln(k) for integer k >= 1.
Real log_uint(unsigned long k, int digits);

// Natural log of an exact integer (rounded in at digits + a few guard bits).
Real log_of_bigint(const BigInt& z, int digits);

// Decimal string with `digits` significant digits; deterministic.
std::string format_real(const Real& x, int digits);

}  // namespace liseq
