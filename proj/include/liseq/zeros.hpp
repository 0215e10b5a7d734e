// Riemann-zero ingestion and everything built on F_n:
//
//   F_n(x) = (-1)^n [ -log(x-1)/A_{n0} + sum_{m=0..n} (-1)^m A_{nm} log(x-2m) ]
//
// single-valued off the cut [0, 2n] with F_n(inf) = 0 (the first sum rule
// kills the log coefficients' total). Off the real axis the principal
// branches realize that normalization directly; on the real axis outside
// the cut the imaginary parts cancel by the same sum rule and the value is
// computed from real logs of moduli.
//
// Lambda_n = sum over zero pairs of F_n(rho); with the table's ordinates
// each pair <rho, 1-rho> = (1/2 + i g, 1/2 - i g) contributes 2 Re F_n.
#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "liseq/bigfloat.hpp"

namespace liseq {

struct ZeroTable {
    std::vector<double> ordinates;  // ascending positive imaginary parts
    std::string source;

    std::size_t count() const { return ordinates.size(); }
};

// One decimal ordinate per line; '#' lines are comments. Non-monotone,
// non-positive or unparsable lines raise data_error with the line number.
ZeroTable load_zeros(const std::filesystem::path& path);

struct MpComplex {
    Real re, im;
};

struct FnEvaluation {
    long n = 0;
    MpComplex x;
    MpComplex value;
    std::string branch_note;
};

// Throws std::domain_error for x on the cut [0, 2n] (real axis only).
FnEvaluation f_n(const MpComplex& x, long n, int digits);

// Large-n form F_n(rho) ~ g(rho)/(rho(rho-1)) (-1)^n n^{rho-1/2} / log n.
// Requires n >= 2 and rho away from the poles of g (even integers).
std::complex<double> f_n_asymptotic(std::complex<double> rho, long n);

// Modulus estimate (2n/T)^t / (T^2 log n) with T = |Im rho|, t = Re rho - 1/2,
// valid for n >> T >> 1. (The paper's display carries exponent "Re rho", but
// its own derivation, its threshold formulas and the g-modulus all use
// t = Re rho - 1/2; we follow the self-consistent form.)
double f_n_modulus_estimate(std::complex<double> rho, double n);

struct ZeroSumResult {
    Real value;
    double tail_bound;  // heuristic: zero density x the 1/gamma^2 term decay
};

// sum_{k <= pairs} 2 Re F_n(1/2 + i gamma_k), ascending, plus the reported
// tail bound for the omitted zeros. pairs may be 0 (empty sum).
ZeroSumResult zero_sum_lambda(long n, const ZeroTable& table, std::size_t pairs, int digits);

// Keiper-normalized truncated zero sum:
//   lambda_n^K = (1/n) sum_pairs 2 Re [1 - (1 - 1/rho)^n],  rho = 1/2 + i gamma.
// (Li's lambda_n^L is n times this.) Double precision: |1 - 1/rho| = 1 on
// the line, so the powers only ever rotate.
double keiper_lambda(long n, const ZeroTable& table, std::size_t pairs);

}  // namespace liseq
