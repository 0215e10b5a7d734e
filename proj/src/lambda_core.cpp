#include "liseq/lambda_core.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "liseq/coefficients.hpp"
#include "liseq/errors.hpp"
#include "liseq/parallel.hpp"

namespace liseq {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void require_coverage(long n, int working_digits, long have_n, int have_digits,
                      const char* what) {
    if (have_n < n)
        throw precision_error(std::string(what) + " covers m <= " + std::to_string(have_n) +
                              ", need m <= " + std::to_string(n));
    if (have_digits < working_digits)
        throw precision_error(std::string(what) + " carries " + std::to_string(have_digits) +
                              " digits, need " + std::to_string(working_digits));
}

Real finish_delta(long n, const Real& value, int wd) {
    return value - (log_uint(static_cast<unsigned long>(n), wd) + asymptote_constant(wd));
}

}  // namespace

const char* to_string(LambdaForm form) {
    switch (form) {
        case LambdaForm::direct: return "direct";
        case LambdaForm::u_form: return "u";
        case LambdaForm::v_form: return "v";
    }
    return "?";
}

Real asymptote_constant(int digits) {
    return (const_euler(digits + 2) - const_ln_pi(digits + 2) - 1) / 2;
}

Real keiper_constant(int digits) {
    return (const_euler(digits + 2) - const_ln_2pi(digits + 2) - 1) / 2;
}

BernoulliLogTable build_bernoulli_log_table(long n_max, int digits, unsigned threads) {
    if (n_max < 1) throw std::domain_error("build_bernoulli_log_table: n_max must be >= 1");
    BernoulliLogTable t;
    t.n_max = n_max;
    t.digits = digits;
    t.log_abs_bernoulli.resize(static_cast<std::size_t>(n_max) + 1);
    t.log_odd_double_fact.resize(static_cast<std::size_t>(n_max) + 1);
    detail::parallel_for(1, n_max + 1, threads, [&](long m) {
        t.log_abs_bernoulli[static_cast<std::size_t>(m)] = log_bernoulli_even(m, digits);
        if (m == 1) {
            t.log_odd_double_fact[1] = real_zero(digits);  // (-1)!! = 1
        } else {
            BigInt df;
            mpz_2fac_ui(df.backend().data(), static_cast<unsigned long>(2 * m - 3));
            t.log_odd_double_fact[static_cast<std::size_t>(m)] = log_of_bigint(df, digits + 8);
        }
    });
    return t;
}

LambdaRecord lambda_direct(long n, const PrecisionPlan& plan, const XiLogTable& table) {
    if (n < 1) throw std::domain_error("lambda_direct: n must be >= 1");
    require_coverage(n, plan.working_digits, table.n_max(), table.digits(), "xi-log table");
    const auto start = clock_type::now();
    const int wd = plan.working_digits;

    CoefficientRow row = coefficient_row(n);
    Real sum = real_zero(wd);
    for (long m = 1; m <= n; ++m) {
        Real term = to_real(row.at(m), wd) * round_to(table.entry(m), wd);
        if (m % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    if (n % 2 != 0) sum = -sum;

    LambdaRecord rec;
    rec.n = n;
    rec.value = sum;
    rec.delta = finish_delta(n, sum, wd);
    rec.form = LambdaForm::direct;
    rec.digits_used = wd;
    rec.elapsed_seconds = seconds_since(start);
    return rec;
}

LambdaRecord lambda_u_form(long n, const PrecisionPlan& plan, const BernoulliLogTable& logs) {
    if (n < 1) throw std::domain_error("lambda_u_form: n must be >= 1");
    require_coverage(n, plan.working_digits, logs.n_max, logs.digits, "Bernoulli log table");
    const auto start = clock_type::now();
    const int wd = plan.working_digits;

    CoefficientRow row = coefficient_row(n);
    Real sum = real_zero(wd);
    for (long m = 1; m <= n; ++m) {
        Real lb = round_to(logs.log_abs_bernoulli[static_cast<std::size_t>(m)], wd) -
                  round_to(logs.log_odd_double_fact[static_cast<std::size_t>(m)], wd);
        Real term = to_real(row.at(m), wd) * lb;
        if (m % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Real ln_2pi = const_ln_2pi(wd);
    Real inv_2a0 = 1 / (2 * to_real(row.at(0), wd));
    Real u = sum + inv_2a0 * ln_2pi;
    if (n % 2 != 0) u = -u;

    LambdaRecord rec;
    rec.n = n;
    rec.value = ln_2pi / 2 + u;
    rec.delta = finish_delta(n, rec.value, wd);
    rec.form = LambdaForm::u_form;
    rec.digits_used = wd;
    rec.elapsed_seconds = seconds_since(start);
    return rec;
}

LambdaRecord lambda_v_form(long n, const PrecisionPlan& plan, const BernoulliLogTable& logs) {
    if (n < 1) throw std::domain_error("lambda_v_form: n must be >= 1");
    require_coverage(n, plan.working_digits, logs.n_max, logs.digits, "Bernoulli log table");
    const auto start = clock_type::now();
    const int wd = plan.working_digits;

    const Real ln2 = const_ln2(wd);
    const Real ln_pi = const_ln_pi(wd);
    CoefficientRow row = coefficient_row(n);

    Real sum = real_zero(wd);
    for (long m = 1; m <= n; ++m) {
        // ln Gamma(m - 1/2) = ln (2m-3)!! - (m-1) ln 2 + ln(pi)/2
        Real lgamma_half = round_to(logs.log_odd_double_fact[static_cast<std::size_t>(m)], wd) -
                           (m - 1) * ln2 + ln_pi / 2;
        Real term = to_real(row.at(m), wd) *
                    (round_to(logs.log_abs_bernoulli[static_cast<std::size_t>(m)], wd) - lgamma_half);
        if (m % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Real a0 = to_real(row.at(0), wd);
    Real inv_a0 = 1 / a0;
    Real bracket = sum + (inv_a0 - a0) * ln2 + (inv_a0 - a0 / 2) * ln_pi;
    if (n % 2 != 0) bracket = -bracket;

    LambdaRecord rec;
    rec.n = n;
    rec.value = ln_pi / 2 + bracket;
    rec.delta = finish_delta(n, rec.value, wd);
    rec.form = LambdaForm::v_form;
    rec.digits_used = wd;
    rec.elapsed_seconds = seconds_since(start);
    return rec;
}

Real delta_lambda(const LambdaRecord& record) { return record.delta; }

Real averaged_delta(long n, const Real& delta_n, const Real& delta_prev) {
    if (n < 2) throw std::domain_error("averaged_delta: n must be >= 2");
    return (delta_n + delta_prev) / 2;
}

std::vector<LambdaRecord> lambda_scan(long from, long to, int target_digits,
                                      const XiLogTable* table, unsigned threads) {
    if (from < 1 || to < from) throw std::domain_error("lambda_scan: need 1 <= from <= to");
    PrecisionPlan plan = plan_for(to, target_digits);

    XiLogTable local;
    if (table == nullptr) {
        local = build_xilog_table(to, plan.working_digits, XiLogRoute::gamma_zeta,
                                  cache_dir_from_env(), threads);
        table = &local;
    }

    const long first = (from >= 2) ? from - 1 : from;
    std::vector<LambdaRecord> records(static_cast<std::size_t>(to - first) + 1);
    detail::parallel_for(first, to + 1, threads, [&](long n) {
        PrecisionPlan p = plan_for(n, target_digits);
        records[static_cast<std::size_t>(n - first)] = lambda_direct(n, p, *table);
    });
    return records;
}

void write_lambda_csv(std::ostream& out, const std::vector<LambdaRecord>& records,
                      long from, long to, int print_digits) {
    out << "n,lambda,delta,n_avg_delta\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const LambdaRecord& r = records[i];
        if (r.n < from || r.n > to) continue;
        out << r.n << ',' << format_real(r.value, print_digits) << ','
            << format_real(r.delta, print_digits) << ',';
        if (r.n >= 2 && i > 0 && records[i - 1].n == r.n - 1) {
            Real avg = averaged_delta(r.n, r.delta, records[i - 1].delta);
            out << format_real(r.n * avg, print_digits);
        }
        out << '\n';
    }
}

}  // namespace liseq
