// Command-line front end: number tables, integral evaluation, log-gamma
// evaluation, and the named verification suites.

#include "CLI11.hpp"

#include "qgamma/log_gamma.hpp"
#include "qgamma/report.hpp"
#include "qgamma/special_numbers.hpp"
#include "qgamma/suites.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qgamma;

struct CommonOpts {
    long p = 5;
    int precision = 12;
    std::string q;  // "a/b"; empty means the per-backend default
    long alpha = 1;
    long beta = 1;
    std::string levels = "2..4";
    std::string x = "0";
    int trunc = 24;
    std::string method = "limit-split";
    std::string variant = "auto";
    double tol = 1e-9;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "odd prime for the p-adic carrier");
    cmd->add_option("--precision", o.precision, "tracked p-adic digits");
    cmd->add_option("--q", o.q, "q as an exact rational a/b");
    cmd->add_option("--alpha", o.alpha, "weight alpha");
    cmd->add_option("--beta", o.beta, "weight beta");
    cmd->add_option("--levels", o.levels, "Riemann level range n1..n2 (or a single level)");
    cmd->add_option("--x", o.x, "evaluation point, exact rational");
    cmd->add_option("--trunc", o.trunc, "series truncation order");
    cmd->add_option("--method", o.method, "summation method")
        ->check(CLI::IsMember({"limit-split", "euler", "cesaro", "direct"}));
    cmd->add_option("--variant", o.variant, "series index variant")
        ->check(CLI::IsMember({"paper", "derived", "auto"}));
    cmd->add_option("--tol", o.tol, "target tolerance for real summation");
}

std::pair<int, int> parse_levels(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

QWeightParams make_params(const CommonOpts& o, bool padic) {
    QWeightParams params;
    if (!o.q.empty())
        params.q = parse_rational(o.q);
    else
        params.q = padic ? Rational(1 + o.p) : rat(1, 2);
    params.alpha = o.alpha;
    params.beta = o.beta;
    if (padic) params.context = make_context(o.p, o.precision);
    return params;
}

Variant pick_variant(const std::string& name) {
    const VariantChoice c = parse_variant(name);
    return c == VariantChoice::Paper ? Variant::Paper : Variant::Derived;
}

// Closed form of the integral the padic/real backends approximate. Twisted:
// sum of twisted bracket moments. Plain measure mu_{-q}: binomial expansion of
// the bracket powers against the exponential moments.
Rational closed_integral(const IntegrandSpec& spec, const QWeightParams& params) {
    if (params.q == 1) throw std::domain_error("closed evaluation needs q != 1");
    const Rational Q = spec.twist ? params.q_beta() : params.q;
    if (const auto* e = std::get_if<ExpIntegrand>(&spec.f)) {
        const Rational base = spec.twist ? e->base / Q : e->base;
        const Rational den = Rational(1) + base * Q;
        if (den == 0) throw std::domain_error("closed integral pole: 1 + a q = 0");
        return (Rational(1) + Q) / den;
    }
    const auto& poly = std::get<BracketPoly>(spec.f);
    if (spec.twist) {
        Rational acc(0);
        for (size_t k = 0; k < poly.coeffs.size(); ++k)
            if (poly.coeffs[k] != 0)
                acc += poly.coeffs[k] *
                       twisted_bracket_moment(static_cast<int>(k), poly.shift, params);
        return acc;
    }
    if (!poly.shift.fits_slong_p()) throw std::invalid_argument("shift out of range");
    const long shift = poly.shift.get_si();
    const Rational qa = params.q_alpha();
    Rational acc(0);
    for (size_t k = 0; k < poly.coeffs.size(); ++k) {
        if (poly.coeffs[k] == 0) continue;
        Rational mk(0);
        for (size_t l = 0; l <= k; ++l) {
            const Rational den = Rational(1) + rat_pow(qa, static_cast<long>(l)) * Q;
            if (den == 0) throw std::domain_error("closed integral pole: 1 + q^{al+1} = 0");
            Rational term = Rational(binomial(static_cast<unsigned long>(k),
                                              static_cast<unsigned long>(l))) *
                            rat_pow(qa, static_cast<long>(l) * shift) * (Rational(1) + Q) / den;
            if (l % 2 == 1) term = -term;
            mk += term;
        }
        acc += poly.coeffs[k] * mk / rat_pow(Rational(1) - qa, static_cast<long>(k));
    }
    return acc;
}

int run_numbers(const CommonOpts& o, const std::string& kind, int n_max) {
    if (n_max < 0) throw std::invalid_argument("--n must be >= 0");
    std::cout << "# kind=" << kind << " n=0.." << n_max << "\n";
    if (kind == "qgenocchi") {
        const QWeightParams params = make_params(o, false);
        const Integer x = to_integer(parse_rational(o.x));
        const auto table = genocchi_table(n_max, params, x);
        for (int n = 0; n <= n_max; ++n)
            std::cout << n << "\t" << to_string(table[static_cast<size_t>(n)]) << "\n";
        return 0;
    }
    if (kind == "qeuler") {
        const QWeightParams params = make_params(o, false);
        const auto table = qeuler_table(n_max, params.q, params.alpha);
        for (int n = 0; n <= n_max; ++n)
            std::cout << n << "\t" << to_string(table[static_cast<size_t>(n)]) << "\n";
        return 0;
    }
    if (kind == "genocchi-limit") {
        for (int n = 0; n <= n_max; ++n)
            std::cout << n << "\t" << to_string(qgenocchi_limit_q1(n, o.alpha, o.beta)) << "\n";
        return 0;
    }
    ClassicalKind ck;
    if (kind == "classical-genocchi")
        ck = ClassicalKind::Genocchi;
    else if (kind == "classical-euler")
        ck = ClassicalKind::Euler;
    else
        ck = ClassicalKind::Bernoulli;
    for (int n = 0; n <= n_max; ++n)
        std::cout << n << "\t" << to_string(classical_number(ck, n)) << "\n";
    return 0;
}

int run_integrate(const CommonOpts& o, const std::string& integrand, const std::string& backend) {
    const IntegrandSpec spec = IntegrandSpec::parse(integrand);
    std::cout << "# integrand=" << spec.render() << " backend=" << backend << "\n";
    if (backend == "closed") {
        const QWeightParams params = make_params(o, false);
        std::cout << "value\t" << to_string(closed_integral(spec, params)) << "\n";
        return 0;
    }
    if (backend == "real") {
        const QWeightParams params = make_params(o, false);
        const AbelIntegral r =
            fermionic_integral_real(spec, params, parse_sum_method(o.method), o.tol);
        std::cout << "value\t" << format_double(r.value) << "\n"
                  << "method\t" << to_string(r.outcome.method) << "\n"
                  << "terms\t" << r.outcome.terms_used << "\n"
                  << "err_est\t" << format_double(r.outcome.error_estimate) << "\n"
                  << "converged\t" << (r.outcome.converged ? "yes" : "no") << "\n";
        return r.outcome.converged ? 0 : 1;
    }
    const auto [lo, hi] = parse_levels(o.levels);
    if (backend == "bosonic") {
        const auto levels = bosonic_riemann_levels(spec, o.p, lo, hi);
        for (const auto& lv : levels)
            std::cout << "N=" << lv.level << "\t" << render_rational(lv.value) << "\n";
        return 0;
    }
    // padic: plain fermionic integral, or the twisted operator when the
    // integrand carries ";twist".
    const QWeightParams params = make_params(o, true);
    const auto levels = spec.twist ? twisted_integral_levels(spec, params, lo, hi)
                                   : fermionic_integral_padic(spec, params, lo, hi);
    for (const auto& lv : levels)
        std::cout << "N=" << lv.level << "\t"
                  << PadicNumber::from_rational(params.context, lv.value).str() << "\t"
                  << render_rational(lv.value) << "\n";
    return 0;
}

int run_loggamma(const CommonOpts& o, const std::string& mode_name, const std::string& backend,
                 bool p_given) {
    const LogGammaMode mode = parse_log_gamma_mode(mode_name);
    const Rational x = parse_rational(o.x);
    std::cout << "# loggamma mode=" << to_string(mode) << " backend=" << backend << " x="
              << to_string(x) << "\n";
    if (backend == "real") {
        const QWeightParams params = make_params(o, false);
        const RealEval ev = log_gamma_real(x, params, mode, parse_sum_method(o.method), o.tol);
        std::cout << "value\t" << format_double(ev.value) << "\n"
                  << "method\t" << to_string(ev.outcome.method) << "\n"
                  << "terms\t" << ev.outcome.terms_used << "\n"
                  << "err_est\t" << format_double(ev.outcome.error_estimate) << "\n"
                  << "converged\t" << (ev.outcome.converged ? "yes" : "no") << "\n";
        return ev.outcome.converged ? 0 : 1;
    }
    if (backend == "padic") {
        const QWeightParams params = make_params(o, true);
        const auto [lo, hi] = parse_levels(o.levels);
        for (const auto& [N, v] : log_gamma_padic(x, params, mode, lo, hi))
            std::cout << "N=" << N << "\t" << v.str() << "\n";
        return 0;
    }
    if (backend == "series" || backend == "series-euler") {
        const bool euler = (backend == "series-euler");
        const Variant var = pick_variant(o.variant);
        if (p_given) {
            const QWeightParams params = make_params(o, true);
            const SeriesEvalPadic ev = euler ? series_rhs_euler_padic(x, params, o.trunc, var)
                                             : series_rhs_padic(x, params, o.trunc, var);
            std::cout << "value\t" << ev.value.str() << "\n"
                      << "terms\t" << ev.terms_used << "\n"
                      << "predicate_valuation\t" << ev.predicate_valuation << "\n"
                      << "variant\t" << to_string(var) << "\n";
            return 0;
        }
        const QWeightParams params = make_params(o, false);
        const SeriesEvalReal ev = euler ? series_rhs_euler(x, params, o.trunc, var)
                                        : series_rhs(x, params, o.trunc, var);
        std::cout << "value\t" << format_double(ev.value) << "\n"
                  << "terms\t" << ev.terms_used << "\n"
                  << "predicate_ratio\t" << format_double(ev.predicate_ratio) << "\n"
                  << "variant\t" << to_string(var) << "\n";
        return 0;
    }
    // classical | classical-euler: the q -> 1 series forms.
    const CorollaryKind kind =
        (backend == "classical-euler") ? CorollaryKind::Euler : CorollaryKind::Genocchi;
    const double value = classical_series_rhs(x.get_d(), o.trunc, kind, pick_variant(o.variant));
    std::cout << "value\t" << format_double(value) << "\n";
    return 0;
}

int run_verify(const CommonOpts& o, CLI::App* cmd, const std::string& suite_name,
               const std::string& format, const std::string& out_path, bool sequential) {
    const SuiteName suite = parse_suite(suite_name);
    SuiteParams P;
    if (cmd->count("--p")) P.p = o.p;
    P.precision = o.precision;
    if (cmd->count("--q")) {
        const Rational q = parse_rational(o.q);
        P.q_padic = q;
        P.q_real = q;
    }
    if (cmd->count("--alpha")) P.alpha = o.alpha;
    if (cmd->count("--beta")) P.beta = o.beta;
    if (cmd->count("--levels")) {
        const auto [lo, hi] = parse_levels(o.levels);
        P.level_lo = lo;
        P.level_hi = hi;
    }
    if (cmd->count("--x")) P.x = parse_rational(o.x);
    if (cmd->count("--trunc")) P.trunc = o.trunc;
    P.method = parse_sum_method(o.method);
    P.variant = parse_variant(o.variant);
    P.tol = o.tol;
    P.parallel = !sequential;

    const SuiteReport report = run_suite(suite, P);
    if (out_path.empty()) {
        emit(report, format, std::cout);
        std::cerr << summary_line(report) << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        emit(report, format, f);
        std::cout << summary_line(report) << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted q-Genocchi / q-Euler numbers and p-adic q-log-gamma toolkit"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* numbers = app.add_subcommand("numbers", "print a number table for n = 0..N");
    std::string kind = "qgenocchi";
    int n_max = 10;
    numbers->add_option("--kind", kind, "which sequence")
        ->check(CLI::IsMember({"qgenocchi", "qeuler", "genocchi-limit", "classical-genocchi",
                               "classical-euler", "classical-bernoulli"}));
    numbers->add_option("--n", n_max, "largest index");
    add_common_flags(numbers, o);

    auto* integrate = app.add_subcommand("integrate", "evaluate a fermionic q-integral");
    std::string integrand = "poly:[1]";
    std::string int_backend = "closed";
    integrate->add_option("--integrand", integrand,
                          "poly:[c0,c1,...]@shift or exp:a, optional ;twist suffix");
    integrate->add_option("--backend", int_backend, "evaluation backend")
        ->check(CLI::IsMember({"closed", "padic", "real", "bosonic"}));
    add_common_flags(integrate, o);

    auto* loggamma = app.add_subcommand("loggamma", "evaluate a log-gamma object");
    std::string mode = "alpha-beta";
    std::string lg_backend = "real";
    loggamma->add_option("--mode", mode, "integral variant")
        ->check(CLI::IsMember({"kim", "alpha", "alpha-beta"}));
    loggamma->add_option("--backend", lg_backend, "evaluation backend")
        ->check(CLI::IsMember({"real", "padic", "series", "series-euler", "classical",
                               "classical-euler"}));
    add_common_flags(loggamma, o);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_name;
    std::string format = "json";
    std::string out_path;
    bool sequential = false;
    verify->add_option("--suite", suite_name, "suite name (or 'all')")->required();
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "write the report to this file");
    verify->add_flag("--sequential", sequential, "disable case-level parallelism");
    add_common_flags(verify, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*numbers) return run_numbers(o, kind, n_max);
        if (*integrate) return run_integrate(o, integrand, int_backend);
        if (*loggamma) return run_loggamma(o, mode, lg_backend, loggamma->count("--p") > 0);
        if (*verify) return run_verify(o, verify, suite_name, format, out_path, sequential);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
