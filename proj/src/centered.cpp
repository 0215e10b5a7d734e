#include "liseq/centered.hpp"

#include <ostream>
#include <stdexcept>

#include "liseq/errors.hpp"
#include "liseq/lambda_core.hpp"
#include "liseq/precision.hpp"

namespace liseq {

CenteredConfig centered_config(long n, const std::string& w_tilde_decimal, int digits) {
    if (n < 1) throw std::domain_error("centered_config: n must be >= 1");
    CenteredConfig cfg;
    cfg.n = n;
    cfg.digits = digits;
    cfg.w_tilde = real_from(w_tilde_decimal, digits + 8);
    if (!(cfg.w_tilde > 0) || !(cfg.w_tilde < kWTildeMax))
        throw std::domain_error("centered_config: w~ = " + w_tilde_decimal +
                                " outside (0, " + std::to_string(kWTildeMax) + ")");

    cfg.r.reserve(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        Real q = real_from(4 * m - 1, digits + 8);
        cfg.r.push_back(sqrt(1 + q * q / cfg.w_tilde));
    }
    for (long m = 1; m <= n; ++m)
        if (!(cfg.r[static_cast<std::size_t>(m)] > cfg.r[static_cast<std::size_t>(m - 1)]))
            throw std::domain_error("centered_config: coincident r_m at m = " + std::to_string(m));
    return cfg;
}

Real centered_lambda(long n, const CenteredConfig& cfg, const XiLogTable& table, int digits) {
    if (n < 1 || n > cfg.n)
        throw std::domain_error("centered_lambda: n outside the config range");
    if (cfg.digits < digits)
        throw precision_error("centered_lambda: config carries " + std::to_string(cfg.digits) +
                              " digits, need " + std::to_string(digits));
    if (table.n_max() < n)
        throw precision_error("centered_lambda: xi-log table covers m <= " +
                              std::to_string(table.n_max()) + ", need m <= " + std::to_string(n));
    if (table.digits() < digits)
        throw precision_error("centered_lambda: xi-log table carries " +
                              std::to_string(table.digits()) + " digits, need " +
                              std::to_string(digits));

    const int wd = cfg.digits;
    Real sum = real_zero(wd);
    for (long m = 1; m <= n; ++m) {
        const Real& rm = cfg.r[static_cast<std::size_t>(m)];
        Real num = real_from(1, wd);
        Real den = real_from(1, wd);
        for (long k = 0; k <= n; ++k) {
            num *= rm + cfg.r[static_cast<std::size_t>(k)];
            if (k != m) den *= rm - cfg.r[static_cast<std::size_t>(k)];
        }
        Real rp1 = rm + 1;
        sum += 2 / (rp1 * rp1) * (num / den) * round_to(table.entry(m), wd);
    }
    return sum;
}

std::vector<CenteredRow> centered_scan(long from, long to, const std::string& w_tilde_decimal,
                                       int target_digits, const XiLogTable* table,
                                       unsigned threads) {
    std::vector<CenteredRow> rows;
    if (from > to) return rows;
    if (from < 1) throw std::domain_error("centered_scan: from must be >= 1");

    PrecisionPlan plan = plan_for(to, target_digits);
    const int wd = plan.working_digits;
    CenteredConfig cfg = centered_config(to, w_tilde_decimal, wd);

    XiLogTable local;
    if (table == nullptr) {
        local = build_xilog_table(to, wd, XiLogRoute::gamma_zeta, cache_dir_from_env(), threads);
        table = &local;
    } else if (table->n_max() < to || table->digits() < wd) {
        throw precision_error("centered_scan: supplied xi-log table too small for the range");
    }

    const Real sqrt_w = sqrt(round_to(cfg.w_tilde, wd));
    const Real C = asymptote_constant(wd);

    // coeff[m] = prod_{k=0..n}(r_m+r_k)/prod_{k!=m}(r_m-r_k), extended in n
    std::vector<Real> coeff(static_cast<std::size_t>(to) + 1);
    std::vector<Real> weight(static_cast<std::size_t>(to) + 1);  // 2/(r_m+1)^2 * xilog(m)
    auto extend_to = [&](long n) {
        // multiply existing coefficients by (r_m + r_n)/(r_m - r_n), add slot n
        for (long m = 1; m < n; ++m) {
            const Real& rm = cfg.r[static_cast<std::size_t>(m)];
            const Real& rn = cfg.r[static_cast<std::size_t>(n)];
            coeff[static_cast<std::size_t>(m)] *= (rm + rn) / (rm - rn);
        }
        const Real& rn = cfg.r[static_cast<std::size_t>(n)];
        Real num = real_from(1, wd), den = real_from(1, wd);
        for (long k = 0; k <= n; ++k) {
            num *= rn + cfg.r[static_cast<std::size_t>(k)];
            if (k != n) den *= rn - cfg.r[static_cast<std::size_t>(k)];
        }
        coeff[static_cast<std::size_t>(n)] = num / den;
        Real rp1 = rn + 1;
        weight[static_cast<std::size_t>(n)] = 2 / (rp1 * rp1) * round_to(table->entry(n), wd);
    };

    for (long m = 1; m <= from; ++m) extend_to(m);
    for (long n = from; n <= to; ++n) {
        if (n > from) extend_to(n);
        Real value = real_zero(wd);
        for (long m = 1; m <= n; ++m)
            value += weight[static_cast<std::size_t>(m)] * coeff[static_cast<std::size_t>(m)];
        CenteredRow row;
        row.n = n;
        row.remainder = value - sqrt_w * (log_uint(static_cast<unsigned long>(n), wd) + C);
        row.value = std::move(value);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_centered_csv(std::ostream& out, const std::vector<CenteredRow>& rows,
                        int print_digits) {
    out << "n,centered_lambda,remainder\n";
    for (const CenteredRow& r : rows)
        out << r.n << ',' << format_real(r.value, print_digits) << ','
            << format_real(r.remainder, print_digits) << '\n';
}

}  // namespace liseq
