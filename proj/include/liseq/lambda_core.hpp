// Lambda_n by its three equivalent closed forms, the remainder
// delta_n = Lambda_n - (log n + C), and the period-2 averaged remainder.
//
//   direct:  Lambda_n = (-1)^n sum_{m=1..n} (-1)^m A_{nm} log 2xi(2m)
//   u form:  Lambda_n = 1/2 log 2pi + u_n,
//            u_n = (-1)^n [ sum (-1)^m A_{nm} log(|B_2m|/(2m-3)!!)
//                           + log(2pi)/(2 A_{n0}) ]
//   v form:  Lambda_n = 1/2 log pi
//            + (-1)^n [ sum (-1)^m A_{nm} log(|B_2m|/Gamma(m-1/2))
//                       + (1/A_{n0} - A_{n0}) log 2
//                       + (1/A_{n0} - A_{n0}/2) log pi ]
//
// with C = (gamma - log pi - 1)/2. Sums run ascending in m at the plan's
// working precision; the plan already budgets the peak summand, so no
// compensated summation is used.
#pragma once

#include <iosfwd>
#include <vector>

#include "liseq/bigfloat.hpp"
#include "liseq/precision.hpp"
#include "liseq/special_values.hpp"

namespace liseq {

enum class LambdaForm { direct, u_form, v_form };

const char* to_string(LambdaForm form);

struct LambdaRecord {
    long n = 0;
    Real value;
    Real delta;  // value - (log n + C), at working precision
    LambdaForm form = LambdaForm::direct;
    int digits_used = 0;
    double elapsed_seconds = 0.0;
};

// C = (gamma - log pi - 1)/2 ~ -0.783757110474
Real asymptote_constant(int digits);

// Keiper's c = (gamma - log 2pi - 1)/2 = C - log(2)/2 ~ -1.130330700754
Real keiper_constant(int digits);

// Inputs shared by the u and v forms: ln|B_2m| and ln (2m-3)!! for m <= n_max,
// built through the float Bernoulli identity (not the exact rationals).
struct BernoulliLogTable {
    long n_max = -1;
    int digits = 0;
    std::vector<Real> log_abs_bernoulli;      // index m = 0..n_max, [0] unused
    std::vector<Real> log_odd_double_fact;    // ln (2m-3)!!, [0] unused
};

BernoulliLogTable build_bernoulli_log_table(long n_max, int digits, unsigned threads = 0);

// The table must cover m <= n at >= plan.working_digits; otherwise throws
// precision_error naming the shortfall.
LambdaRecord lambda_direct(long n, const PrecisionPlan& plan, const XiLogTable& table);
LambdaRecord lambda_u_form(long n, const PrecisionPlan& plan, const BernoulliLogTable& logs);
LambdaRecord lambda_v_form(long n, const PrecisionPlan& plan, const BernoulliLogTable& logs);

Real delta_lambda(const LambdaRecord& record);

// Period-2 averaged remainder: (delta_n + delta_{n-1})/2, n >= 2.
Real averaged_delta(long n, const Real& delta_n, const Real& delta_prev);

// Lambda_{from..to} (direct form) sharing one table and one working
// precision (the plan for `to`). If from >= 2 the record for from-1 is
// included so averaged deltas are defined from the first requested n.
std::vector<LambdaRecord> lambda_scan(long from, long to, int target_digits,
                                      const XiLogTable* table = nullptr,
                                      unsigned threads = 0);

// CSV schema: n,lambda,delta,n_avg_delta (n_avg_delta empty at n = 1 or when
// the preceding record is absent). Emits rows with n in [from, to].
void write_lambda_csv(std::ostream& out, const std::vector<LambdaRecord>& records,
                      long from, long to, int print_digits);

}  // namespace liseq
