#include "qgamma/log_gamma.hpp"

#include "qgamma/special_numbers.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qgamma {

LogGammaMode parse_log_gamma_mode(const std::string& name) {
    if (name == "kim") return LogGammaMode::Kim;
    if (name == "alpha") return LogGammaMode::WeightedAlpha;
    if (name == "alpha-beta") return LogGammaMode::WeightedAlphaBeta;
    throw std::invalid_argument("unknown log-gamma mode: '" + name + "'");
}

std::string to_string(LogGammaMode mode) {
    switch (mode) {
        case LogGammaMode::Kim: return "kim";
        case LogGammaMode::WeightedAlpha: return "alpha";
        case LogGammaMode::WeightedAlphaBeta: return "alpha-beta";
    }
    return "?";
}

std::string to_string(Variant v) { return v == Variant::Paper ? "paper" : "derived"; }

namespace {

long term_cap() {
    if (const char* cap = std::getenv("QGAMMA_MAX_TERMS")) {
        const long c = std::strtol(cap, nullptr, 10);
        if (c > 0) return c;
    }
    return 2000000;
}

long checked_pow(long p, int n, long cap) {
    long v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / p)
            throw std::length_error("level sum exceeds the term cap (QGAMMA_MAX_TERMS)");
        v *= p;
    }
    return v;
}

Rational minus_bracket_of_power(const Rational& Q, long pN) {
    return (Rational(1) + rat_pow(Q, pN)) / (Rational(1) + Q);
}

}  // namespace

RealEval log_gamma_real(const Rational& x, const QWeightParams& params, LogGammaMode mode,
                        SumMethod method, double tol) {
    params.require_real(true);
    if (!(x > 0)) throw std::domain_error("log-gamma needs x > 0");
    const long a_eff = (mode == LogGammaMode::Kim) ? 1 : params.alpha;
    const bool twist = (mode == LogGammaMode::WeightedAlphaBeta);
    const Rational Q = twist ? params.q_beta() : params.q;
    const double Qd = Q.get_d();
    const double qa = rat_pow(params.q, a_eff).get_d();
    const double xd = x.get_d();

    auto kernel = [qa, xd](long t) {
        const double B = q_bracket(qa, xd + static_cast<double>(t));
        return B * (std::log(B) - 1.0);
    };

    AlternatingSeries series;
    if (twist || Q == 1) {
        series.term = kernel;
        if (params.q != 1) {
            const double binf = 1.0 / (1.0 - qa);
            series.limit = binf * (std::log(binf) - 1.0);
        }  // q == 1: kernel unbounded; only the Euler transform converges
    } else {
        series.term = [Qd, kernel](long t) { return std::pow(Qd, static_cast<double>(t)) * kernel(t); };
        series.limit = 0.0;
    }

    RealEval out;
    out.outcome = sum_alternating(series, method, tol);
    out.value = (1.0 + Qd) * out.outcome.value;
    return out;
}

std::vector<std::pair<int, PadicNumber>> log_gamma_padic(const Rational& x,
                                                         const QWeightParams& params,
                                                         LogGammaMode mode, int lo, int hi) {
    params.require_padic();
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad level range");
    if (is_integer(x) && x <= 0)
        throw std::domain_error("p-adic log-gamma needs a positive integer or non-integer x");
    const ContextPtr& ctx = params.context;
    const long p = ctx->prime();
    const long a_eff = (mode == LogGammaMode::Kim) ? 1 : params.alpha;
    const bool twist = (mode == LogGammaMode::WeightedAlphaBeta);
    const Rational Qr = twist ? params.q_beta() : params.q;
    const Rational qa_r = rat_pow(params.q, a_eff);

    const PadicNumber one = PadicNumber::one(ctx);
    const PadicNumber one_minus_qa = PadicNumber::from_rational(ctx, Rational(1) - qa_r);
    const PadicNumber qa = PadicNumber::from_rational(ctx, qa_r);
    PadicNumber pw = is_integer(x)
                         ? PadicNumber::from_rational(ctx, rat_pow(qa_r, to_integer(x).get_si()))
                         : q_pow(qa, x);
    PadicNumber wQ = one;
    const PadicNumber negQ = PadicNumber::from_rational(ctx, -Qr);
    PadicNumber acc = PadicNumber::zero(ctx);

    const long cap = term_cap();
    const long total = checked_pow(p, hi, cap);
    long next_checkpoint = checked_pow(p, lo, cap);
    int next_level = lo;
    std::vector<std::pair<int, PadicNumber>> out;
    for (long t = 0; t < total; ++t) {
        const PadicNumber B = (one - pw) / one_minus_qa;
        if (B.is_zero()) throw std::domain_error("log-gamma kernel hit a vanishing bracket");
        const PadicNumber term = B * (iwasawa_log(B) - one);
        if (twist) {
            acc = (t % 2 == 0) ? acc + term : acc - term;
        } else {
            acc = acc + wQ * term;
            wQ = wQ * negQ;
        }
        pw = pw * qa;
        if (t + 1 == next_checkpoint) {
            const PadicNumber norm =
                PadicNumber::from_rational(ctx, minus_bracket_of_power(Qr, next_checkpoint));
            out.emplace_back(next_level, acc / norm);
            ++next_level;
            if (next_level > hi) break;
            next_checkpoint *= p;
        }
    }
    return out;
}

namespace {

double thm1_rhs_real(const Rational& x, const QWeightParams& params) {
    const double qa = params.q_alpha().get_d();
    const double qb = params.q_beta().get_d();
    const double bx = q_bracket(qa, x.get_d());
    return (1.0 + qb) * bx * (std::log(bx) - 1.0);
}

}  // namespace

double thm1_residual_real(const Rational& x, const QWeightParams& params, SumMethod method,
                          double tol) {
    if (!(x > 0)) throw std::domain_error("functional equation needs x > 0");
    const RealEval g1 = log_gamma_real(x + 1, params, LogGammaMode::WeightedAlphaBeta, method, tol);
    const RealEval g0 = log_gamma_real(x, params, LogGammaMode::WeightedAlphaBeta, method, tol);
    return g1.value + g0.value - thm1_rhs_real(x, params);
}

std::vector<std::pair<int, PadicNumber>> thm1_residual_padic(const Rational& x,
                                                             const QWeightParams& params,
                                                             int lo, int hi) {
    const auto g1 = log_gamma_padic(x + 1, params, LogGammaMode::WeightedAlphaBeta, lo, hi);
    const auto g0 = log_gamma_padic(x, params, LogGammaMode::WeightedAlphaBeta, lo, hi);
    const ContextPtr& ctx = params.context;
    const Rational qa_r = params.q_alpha();
    const PadicNumber one = PadicNumber::one(ctx);
    PadicNumber bx = PadicNumber::zero(ctx);
    if (is_integer(x)) {
        bx = PadicNumber::from_rational(ctx, q_bracket(qa_r, to_integer(x)));
    } else {
        bx = q_bracket(PadicNumber::from_rational(ctx, qa_r), x);
    }
    if (bx.is_zero()) throw std::domain_error("functional equation needs [x] != 0");
    const PadicNumber two_qb =
        PadicNumber::from_rational(ctx, Rational(1) + params.q_beta());
    const PadicNumber rhs = two_qb * bx * (iwasawa_log(bx) - one);
    std::vector<std::pair<int, PadicNumber>> out;
    for (size_t i = 0; i < g0.size() && i < g1.size(); ++i)
        out.emplace_back(g0[i].first, g1[i].second + g0[i].second - rhs);
    return out;
}

namespace {

struct SeriesShape {
    bool euler_form;  // coefficients xi_n and n(n+1) denominators (beta == 1)
};

SeriesEvalReal series_rhs_real_impl(const Rational& x, const QWeightParams& params, int trunc,
                                    Variant v, SeriesShape shape) {
    params.require_real(false);
    if (!(x > 0)) throw std::domain_error("series expansion needs x > 0");
    if (trunc < 1) throw std::invalid_argument("series truncation must be >= 1");
    if (shape.euler_form && params.beta != 1)
        throw std::invalid_argument("Euler-form series needs beta == 1");

    const Rational qa = params.q_alpha();
    const Rational qb = params.q_beta();

    SeriesEvalReal out;
    // Exact arithmetic throughout when q^{alpha x} is rational (integer x);
    // only the final logarithm is floating point.
    if (!is_integer(x)) {
        throw std::invalid_argument("real series expansion expects integer x (rational powers are not exact)");
    }
    const long xl = to_integer(x).get_si();
    const Rational qax = rat_pow(qa, xl);
    const Rational bx = (Rational(1) - qax) / (Rational(1) - qa);
    const Rational rho = qax / (Rational(1) - qax);
    out.predicate_ratio = rho.get_d();
    if (!(rho < 1))
        throw std::domain_error("series contraction predicate fails: q^{alpha x}/(1-q^{alpha x}) >= 1");

    const Rational half_two_qb = (Rational(1) + qb) / 2;
    Rational c1 = shape.euler_form ? qeuler(1, params.q, params.alpha)
                                   : qgenocchi(2, params) / 2;
    const Rational P = half_two_qb * bx + qax * c1;
    Rational S = -half_two_qb * bx;

    const Rational mq = -qax;
    Rational mpow = mq;          // (-q^{alpha x})^n, starts at n = 1
    Rational bxn(1);             // [x]^n
    int small_run = 0;
    for (int n = 1; n <= trunc; ++n) {
        mpow *= mq;              // now (-q^{alpha x})^{n+1}
        bxn *= bx;
        Rational coef;
        Rational den;
        if (shape.euler_form) {
            const int idx = (v == Variant::Derived) ? n + 1 : n;
            coef = qeuler(idx, params.q, params.alpha);
            den = Rational(n) * Rational(n + 1);
        } else {
            const int idx = (v == Variant::Derived) ? n + 2 : n + 1;
            coef = qgenocchi(idx, params);
            den = Rational(n) * Rational(n + 1) * Rational(n + 2);
        }
        const Rational term = mpow * coef / (den * bxn);
        S += term;
        out.terms_used = n;
        if (std::fabs(term.get_d()) < 1e-22 * (1.0 + std::fabs(S.get_d()))) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
    }
    out.value = P.get_d() * std::log(bx.get_d()) + S.get_d();
    return out;
}

SeriesEvalPadic series_rhs_padic_impl(const Rational& x, const QWeightParams& params, int trunc,
                                      Variant v, SeriesShape shape) {
    params.require_padic();
    if (trunc < 1) throw std::invalid_argument("series truncation must be >= 1");
    if (shape.euler_form && params.beta != 1)
        throw std::invalid_argument("Euler-form series needs beta == 1");
    const ContextPtr& ctx = params.context;
    const int prec = ctx->precision();

    const Rational qa_r = params.q_alpha();
    const PadicNumber one = PadicNumber::one(ctx);
    PadicNumber qax = PadicNumber::zero(ctx);
    if (is_integer(x)) {
        if (x <= 0) throw std::domain_error("series expansion needs x > 0 or non-integer x");
        qax = PadicNumber::from_rational(ctx, rat_pow(qa_r, to_integer(x).get_si()));
    } else {
        qax = q_pow(PadicNumber::from_rational(ctx, qa_r), x);
    }
    const PadicNumber bx = (one - qax) / PadicNumber::from_rational(ctx, Rational(1) - qa_r);
    if (bx.is_zero() || qax.is_zero())
        throw std::domain_error("series expansion needs [x] != 0");

    SeriesEvalPadic out{PadicNumber::zero(ctx), 0, 0};
    out.predicate_valuation = qax.valuation() - bx.valuation();
    if (out.predicate_valuation < 1)
        throw std::domain_error("series contraction predicate fails: v_p(q^{alpha x}) - v_p([x]) < 1");

    const Rational qb = params.q_beta();
    const Rational half_two_qb = (Rational(1) + qb) / 2;
    const Rational c1 = shape.euler_form ? qeuler(1, params.q, params.alpha)
                                         : qgenocchi(2, params) / 2;
    const PadicNumber P =
        PadicNumber::from_rational(ctx, half_two_qb) * bx +
        qax * PadicNumber::from_rational(ctx, c1);
    PadicNumber S = -(PadicNumber::from_rational(ctx, half_two_qb) * bx);

    const PadicNumber mq = -qax;
    PadicNumber mpow = mq;
    PadicNumber bxn = one;
    for (int n = 1; n <= trunc; ++n) {
        mpow = mpow * mq;
        bxn = bxn * bx;
        Rational coef;
        Rational den;
        if (shape.euler_form) {
            const int idx = (v == Variant::Derived) ? n + 1 : n;
            coef = qeuler(idx, params.q, params.alpha);
            den = Rational(n) * Rational(n + 1);
        } else {
            const int idx = (v == Variant::Derived) ? n + 2 : n + 1;
            coef = qgenocchi(idx, params);
            den = Rational(n) * Rational(n + 1) * Rational(n + 2);
        }
        if (coef == 0) continue;
        const PadicNumber term =
            mpow * PadicNumber::from_rational(ctx, coef / den) / bxn;
        S = S + term;
        out.terms_used = n;
        if (term.is_zero() || term.valuation() >= prec) break;
    }
    out.value = P * iwasawa_log(bx) + S;
    return out;
}

}  // namespace

SeriesEvalReal series_rhs(const Rational& x, const QWeightParams& params, int trunc, Variant v) {
    return series_rhs_real_impl(x, params, trunc, v, {false});
}

SeriesEvalReal series_rhs_euler(const Rational& x, const QWeightParams& params, int trunc,
                                Variant v) {
    return series_rhs_real_impl(x, params, trunc, v, {true});
}

SeriesEvalPadic series_rhs_padic(const Rational& x, const QWeightParams& params, int trunc,
                                 Variant v) {
    return series_rhs_padic_impl(x, params, trunc, v, {false});
}

SeriesEvalPadic series_rhs_euler_padic(const Rational& x, const QWeightParams& params, int trunc,
                                       Variant v) {
    return series_rhs_padic_impl(x, params, trunc, v, {true});
}

double classical_series_rhs(double x, int trunc, CorollaryKind kind, Variant v) {
    if (!(x > 0)) throw std::domain_error("classical series needs x > 0");
    if (trunc < 1) throw std::invalid_argument("series truncation must be >= 1");
    const bool genocchi = (kind == CorollaryKind::Genocchi);
    const int max_idx = trunc + 2;
    const auto table = series_coeffs(genocchi ? SeriesKind::Genocchi : SeriesKind::Euler, max_idx);

    const double lead = x + table[genocchi ? 2 : 1].get_d() / (genocchi ? 2.0 : 1.0);
    double acc = lead * std::log(x) - x;
    // Asymptotic series: truncate at the smallest nonzero term.
    double xn = 1.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= trunc; ++n) {
        xn *= x;
        int idx;
        double den;
        if (genocchi) {
            idx = (v == Variant::Derived) ? n + 2 : n + 1;
            den = static_cast<double>(n) * (n + 1) * (n + 2);
        } else {
            idx = (v == Variant::Derived) ? n + 1 : n;
            den = static_cast<double>(n) * (n + 1);
        }
        const double coef = table[static_cast<size_t>(idx)].get_d();
        if (coef == 0.0) continue;
        double term = coef / (den * xn);
        if (n % 2 == 0) term = -term;
        if (std::fabs(term) > prev_mag) break;  // past the asymptotic minimum
        acc += term;
        prev_mag = std::fabs(term);
    }
    return acc;
}

double stirling(double x, int n_max) {
    if (!(x > 0)) throw std::domain_error("stirling series needs x > 0");
    if (n_max < 0 || n_max > 12)
        throw std::invalid_argument("stirling truncation must be between 0 and 12");
    const auto B = series_coeffs(SeriesKind::Bernoulli, n_max + 1);
    double acc = (x - 0.5) * std::log(x) - x;
    double xn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        xn *= x;
        const double b = B[static_cast<size_t>(n + 1)].get_d();
        if (b == 0.0) continue;
        double term = b / (static_cast<double>(n) * (n + 1) * xn);
        if (n % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}

double stirling_reference(double x) {
    if (!(x > 0)) throw std::domain_error("stirling reference needs x > 0");
    return std::lgamma(x) - 0.5 * std::log(2.0 * M_PI);
}

double stirling_error(double x, int n_max) {
    if (!(x > 0)) throw std::domain_error("stirling series needs x > 0");
    if (n_max < 0 || n_max > 12)
        throw std::invalid_argument("stirling truncation must be between 0 and 12");
    const auto B = series_coeffs(SeriesKind::Bernoulli, n_max + 1);
    const long double lx = static_cast<long double>(x);
    // both sides carry magnitude ~x log x, so the subtraction must happen in
    // extended precision or double rounding noise swamps the tail bound
    long double acc = (lx - 0.5L) * std::log(lx) - lx;
    long double xn = 1.0L;
    for (int n = 1; n <= n_max; ++n) {
        xn *= lx;
        const Rational& b = B[static_cast<size_t>(n + 1)];
        if (b == 0) continue;
        const long double num = static_cast<long double>(b.get_num().get_d());
        const long double den = static_cast<long double>(b.get_den().get_d());
        long double term = num / den / (static_cast<long double>(n) * (n + 1) * xn);
        if (n % 2 == 0) term = -term;
        acc += term;
    }
    const long double two_pi = 6.283185307179586476925286766559005768L;
    const long double ref = std::lgamma(lx) - 0.5L * std::log(two_pi);
    return static_cast<double>(std::fabs(acc - ref));
}

double stirling_first_omitted(double x, int n_max) {
    if (!(x > 0)) throw std::domain_error("stirling series needs x > 0");
    const auto B = series_coeffs(SeriesKind::Bernoulli, n_max + 8);
    for (int n = n_max + 1; n <= n_max + 6; ++n) {
        const double b = B[static_cast<size_t>(n + 1)].get_d();
        if (b == 0.0) continue;
        return std::fabs(b) / (static_cast<double>(n) * (n + 1) * std::pow(x, n));
    }
    throw std::logic_error("no nonzero continuation term found");
}

double log_expansion_residual(double z, int trunc) {
    if (!(std::fabs(z) < 1.0)) throw std::domain_error("log expansion needs |z| < 1");
    if (trunc < 0) throw std::invalid_argument("truncation must be >= 0");
    const double lhs = (1.0 + z) * std::log1p(z);
    double rhs = z;
    double zpow = z;  // z^{n+1} after the multiply below
    for (int n = 1; n <= trunc; ++n) {
        zpow *= z;
        double term = zpow / (static_cast<double>(n) * (n + 1));
        if (n % 2 == 0) term = -term;
        rhs += term;
    }
    return lhs - rhs;
}

double log_expansion_tail_bound(double z, int trunc) {
    const double az = std::fabs(z);
    if (!(az < 1.0)) throw std::domain_error("log expansion needs |z| < 1");
    return std::pow(az, trunc + 2) /
           (static_cast<double>(trunc + 1) * (trunc + 2) * (1.0 - az));
}

double bracket_expansion_residual(const Rational& x, long t, const QWeightParams& params,
                                  int trunc) {
    params.require_real(false);
    if (!(x > 0)) throw std::domain_error("bracket expansion needs x > 0");
    const double qa = params.q_alpha().get_d();
    const double xd = x.get_d();
    const double bx = q_bracket(qa, xd);
    const double bt = q_bracket(qa, static_cast<double>(t));
    const double qax = std::pow(qa, xd);
    const double y = qax * bt;
    const double bxt = q_bracket(qa, xd + static_cast<double>(t));
    const double lhs = bxt * (std::log(bxt) - 1.0);
    double rhs = (bx + y) * std::log(bx) - bx;
    double ypow = y;  // y^{n+1} built incrementally
    double bxp = 1.0;
    for (int n = 1; n <= trunc; ++n) {
        ypow *= y;
        bxp *= bx;
        double term = ypow / (static_cast<double>(n) * (n + 1) * bxp);
        if (n % 2 == 0) term = -term;
        rhs += term;
    }
    return lhs - rhs;
}

}  // namespace qgamma
