// liseq command-line interface: closed-form Lambda_n computation, scans,
// zero-sum verification, detection thresholds, the centered variant and
// precision reports, all emitting deterministic text/CSV.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "liseq/centered.hpp"
#include "liseq/coefficients.hpp"
#include "liseq/detection.hpp"
#include "liseq/errors.hpp"
#include "liseq/lambda_core.hpp"
#include "liseq/precision.hpp"
#include "liseq/special_values.hpp"
#include "liseq/zeros.hpp"

namespace {

using namespace liseq;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitPrecision = 4;
constexpr int kExitDomain = 5;

struct CommonOpts {
    std::string digits = "auto";
    int print_digits = 15;
    unsigned threads = 0;
    std::string cache_dir;

    int target() const {
        if (digits == "auto") return print_digits;
        int v = std::stoi(digits);
        if (v < 1) throw std::domain_error("--digits must be >= 1 (or 'auto')");
        return v;
    }
    std::string cache() const { return cache_dir.empty() ? cache_dir_from_env() : cache_dir; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--digits", o.digits, "target decimal digits, or 'auto'")
        ->capture_default_str();
    cmd->add_option("--print-digits", o.print_digits, "significant digits in output")
        ->capture_default_str();
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    cmd->add_option("--cache-dir", o.cache_dir, "xi-log cache directory (default $LISEQ_CACHE_DIR)");
}

std::ostream& open_out(std::optional<std::ofstream>& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.emplace(path);
    if (!*file) throw data_error("cannot open output file: " + path);
    return *file;
}

PrecisionPlan plan_with_override(long n, int target, int working_override) {
    PrecisionPlan plan = plan_for(n, target);
    if (working_override > plan.working_digits) plan.working_digits = working_override;
    return plan;
}

int run_compute(long n, const std::string& form, const CommonOpts& o, int working_override) {
    const int target = o.target();
    PrecisionPlan plan = plan_with_override(n, target, working_override);
    LambdaRecord rec;
    if (form == "direct") {
        XiLogTable table =
            build_xilog_table(n, plan.working_digits, XiLogRoute::gamma_zeta, o.cache(), o.threads);
        rec = lambda_direct(n, plan, table);
    } else {
        BernoulliLogTable logs = build_bernoulli_log_table(n, plan.working_digits, o.threads);
        rec = (form == "u") ? lambda_u_form(n, plan, logs) : lambda_v_form(n, plan, logs);
    }
    int p = std::min(target, o.print_digits);
    std::cout << format_real(rec.value, p) << "\n";
    return 0;
}

int run_scan(long from, long to, const std::string& out_path, const CommonOpts& o) {
    auto records = lambda_scan(from, to, o.target(), nullptr, o.threads);
    std::optional<std::ofstream> file;
    std::ostream& out = open_out(file, out_path);
    write_lambda_csv(out, records, from, to, o.print_digits);
    return 0;
}

int run_zero_sum(long n, const std::string& zeros_path, std::size_t pairs, const CommonOpts& o) {
    ZeroTable table = load_zeros(zeros_path);
    PrecisionPlan plan = plan_for(n, o.target());
    XiLogTable xilog =
        build_xilog_table(n, plan.working_digits, XiLogRoute::gamma_zeta, o.cache(), o.threads);
    LambdaRecord direct = lambda_direct(n, plan, xilog);
    ZeroSumResult zs = zero_sum_lambda(n, table, pairs, o.target());
    std::cout << "n,direct,zero_sum,tail_bound\n"
              << n << ',' << format_real(direct.value, o.print_digits) << ','
              << format_real(zs.value, o.print_digits) << ',' << zs.tail_bound << "\n";
    return 0;
}

int run_threshold(double t, double T, double T0) {
    ViolationHypothesis h{t, T, T0};
    OrderEstimate tn = threshold_tn(h);
    OrderEstimate tni = threshold_tni(h);
    std::cout << "hypothetical zero rho = 1/2 + " << t << " + i*" << T << "  (T0 = " << T0 << ")\n"
              << "crossover n  >~ T^(1+2/t) = T^" << tn.exponent_of_T << " = " << tn.str() << "\n"
              << "with period-2 averaging: n >~ T^(1+1/t) = T^" << tni.exponent_of_T << " = "
              << tni.str() << "\n";
    return 0;
}

int run_centered(long from, long to, const std::string& w, const std::string& out_path,
                 const CommonOpts& o) {
    auto rows = centered_scan(from, to, w, o.target(), nullptr, o.threads);
    std::optional<std::ofstream> file;
    std::ostream& out = open_out(file, out_path);
    write_centered_csv(out, rows, o.print_digits);
    return 0;
}

int run_precision_report(long n, int target, const std::string& out_path) {
    PrecisionPlan plan = plan_for(n, target);
    int peak_m = 0, peak_digits = 0;
    for (long m = 1; m <= n; ++m)
        if (plan.profile_at(m) > peak_digits) {
            peak_digits = plan.profile_at(m);
            peak_m = static_cast<int>(m);
        }
    std::cout << "n " << n << ": working " << plan.working_digits << " digits (guard "
              << plan.guard_digits << ", target " << target << ")\n"
              << "summand profile peaks at m = " << peak_m << " (" << peak_digits
              << " digits; limiting ratio " << plan.peak_ratio << " per n at m/n = 1/sqrt 2)\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw data_error("cannot open output file: " + out_path);
        out << "m,required_digits\n";
        for (long m = 1; m <= n; ++m) out << m << ',' << plan.profile_at(m) << '\n';
    }
    return 0;
}

int run_verify(long n, const std::string& zeros_path, std::size_t pairs, const CommonOpts& o) {
    const int target = o.target();
    bool ok = true;
    auto report = [&](const char* name, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        ok = ok && pass;
    };

    CoefficientRow row = coefficient_row(n);
    report("sum-rules", check_sum_rules(row), "exact rational identities for row n");

    PrecisionPlan plan = plan_for(n, target);
    XiLogTable table =
        build_xilog_table(n, plan.working_digits, XiLogRoute::gamma_zeta, o.cache(), o.threads);
    BernoulliLogTable logs = build_bernoulli_log_table(n, plan.working_digits, o.threads);
    LambdaRecord direct = lambda_direct(n, plan, table);
    LambdaRecord u = lambda_u_form(n, plan, logs);
    LambdaRecord v = lambda_v_form(n, plan, logs);
    Real tol = pow(Real(10, 30), -(target - 5));
    bool forms_ok = abs(direct.value - u.value) < tol && abs(direct.value - v.value) < tol;
    report("form-equivalence", forms_ok,
           "direct/u/v agree to 10^-" + std::to_string(target - 5));

    if (!zeros_path.empty()) {
        ZeroTable zt = load_zeros(zeros_path);
        ZeroSumResult zs = zero_sum_lambda(n, zt, pairs, target);
        Real diff = abs(direct.value - zs.value);
        bool zs_ok = diff <= std::max(zs.tail_bound, 1e-2);
        std::ostringstream detail;
        detail << "|direct - zero_sum| = " << format_real(diff, 3) << ", tail bound "
               << zs.tail_bound << " (" << pairs << " pairs)";
        report("zero-sum", zs_ok, detail.str());
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit Li-type sequence computations for the Riemann zeta function"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* compute = app.add_subcommand("compute", "one Lambda_n by a closed form");
    long n = 1;
    std::string form = "direct";
    int working_override = 0;
    compute->add_option("--n", n, "index n")->required()->check(CLI::PositiveNumber);
    compute->add_option("--form", form, "direct|u|v")
        ->check(CLI::IsMember({"direct", "u", "v"}))
        ->capture_default_str();
    compute->add_option("--working-digits", working_override,
                        "raise the planned working precision");
    add_common(compute, opts);

    auto* scan = app.add_subcommand("scan", "Lambda_n scan to CSV (n,lambda,delta,n_avg_delta)");
    long from = 1, to = 1;
    std::string out_path;
    scan->add_option("--from", from, "first n")->required()->check(CLI::PositiveNumber);
    scan->add_option("--to", to, "last n")->required()->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "output CSV path (default stdout)");
    add_common(scan, opts);

    auto* zero_sum = app.add_subcommand("zero-sum", "compare Lambda_n against its zero-sum form");
    std::string zeros_path;
    std::size_t pairs = 0;
    zero_sum->add_option("--n", n, "index n")->required()->check(CLI::PositiveNumber);
    zero_sum->add_option("--zeros", zeros_path, "zeros file (one ordinate per line)")->required();
    zero_sum->add_option("--pairs", pairs, "zero pairs to sum")->required();
    add_common(zero_sum, opts);

    auto* threshold = app.add_subcommand("threshold", "crossover n for a violating-zero hypothesis");
    double t = 0.25, T = 1e13, T0 = kDefaultT0;
    threshold->add_option("--t", t, "real offset in (0, 1/2)")->required();
    threshold->add_option("--T", T, "zero ordinate (> T0)")->required();
    threshold->add_option("--T0", T0, "confirmed height")->capture_default_str();

    auto* centered = app.add_subcommand("centered", "centered-variant scan to CSV");
    std::string w_tilde = "1";
    centered->add_option("--from", from, "first n")->check(CLI::PositiveNumber);
    centered->add_option("--to", to, "last n")->check(CLI::PositiveNumber);
    centered->add_option("--n", n, "single n (sets --from/--to)")->check(CLI::PositiveNumber);
    centered->add_option("--w", w_tilde, "basepoint parameter w~ in (0, 799.1618)")
        ->capture_default_str();
    centered->add_option("--out", out_path, "output CSV path (default stdout)");
    add_common(centered, opts);

    auto* precision = app.add_subcommand("precision-report", "working-precision plan for n");
    int target = 15;
    precision->add_option("--n", n, "index n")->required()->check(CLI::PositiveNumber);
    precision->add_option("--target", target, "target digits")->capture_default_str();
    precision->add_option("--out", out_path, "per-m profile CSV path");

    auto* verify = app.add_subcommand("verify", "sum rules + form equivalence + zero-sum check");
    verify->add_option("--n", n, "index n")->required()->check(CLI::PositiveNumber);
    verify->add_option("--zeros", zeros_path, "zeros file (optional)");
    verify->add_option("--pairs", pairs, "zero pairs to sum");
    add_common(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(n, form, opts, working_override);
        if (scan->parsed()) return run_scan(from, to, out_path, opts);
        if (zero_sum->parsed()) return run_zero_sum(n, zeros_path, pairs, opts);
        if (threshold->parsed()) return run_threshold(t, T, T0);
        if (centered->parsed()) {
            if (centered->count("--n") != 0) from = to = n;
            if (from > to) throw std::domain_error("centered: --from exceeds --to");
            return run_centered(from, to, w_tilde, out_path, opts);
        }
        if (precision->parsed()) return run_precision_report(n, target, out_path);
        if (verify->parsed()) return run_verify(n, zeros_path, pairs, opts);
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
