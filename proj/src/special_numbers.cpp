#include "qgamma/special_numbers.hpp"

#include <stdexcept>

namespace qgamma {

Rational qgenocchi(int n, const Integer& x, const QWeightParams& params) {
    if (n < 0) throw std::invalid_argument("q-Genocchi index must be >= 0");
    if (n == 0) return Rational(0);
    return Rational(n) * twisted_bracket_moment(n - 1, x, params);
}

Rational qgenocchi(int n, const QWeightParams& params) { return qgenocchi(n, Integer(0), params); }

std::vector<LevelValue> qgenocchi_oracle(int n, const Integer& x, const QWeightParams& params,
                                         int level_lo, int level_hi) {
    if (n < 0) throw std::invalid_argument("moment index must be >= 0");
    IntegrandSpec spec;
    BracketPoly poly;
    poly.coeffs.assign(static_cast<size_t>(n) + 1, Rational(0));
    poly.coeffs.back() = 1;
    poly.shift = x;
    spec.f = std::move(poly);
    return twisted_integral_levels(spec, params, level_lo, level_hi);
}

std::vector<std::vector<LevelValue>> qgenocchi_oracle_table(int n_max, const Integer& x,
                                                            const QWeightParams& params,
                                                            int level_lo, int level_hi) {
    if (n_max < 0) throw std::invalid_argument("moment index must be >= 0");
    params.require_padic();
    const long p = params.context->prime();
    const Rational Q = params.q_beta();
    const Rational qa = params.q_alpha();
    if (params.q == 1) throw std::domain_error("oracle table needs q != 1");
    if (level_lo < 1 || level_hi < level_lo) throw std::invalid_argument("bad level range");

    long total = 1;
    for (int i = 0; i < level_hi; ++i) total *= p;

    const Rational one_minus_qa = Rational(1) - qa;
    if (!x.fits_slong_p()) throw std::invalid_argument("shift out of range");
    Rational t = rat_pow(qa, x.get_si());

    std::vector<Rational> acc(static_cast<size_t>(n_max) + 1, Rational(0));
    std::vector<std::vector<LevelValue>> out(static_cast<size_t>(n_max) + 1);
    long next_checkpoint = 1;
    for (int i = 0; i < level_lo; ++i) next_checkpoint *= p;
    int next_level = level_lo;
    for (long xi = 0; xi < total; ++xi) {
        const Rational b = (Rational(1) - t) / one_minus_qa;
        t *= qa;
        Rational bp(1);
        for (int k = 0; k <= n_max; ++k) {
            if (xi % 2 == 0)
                acc[static_cast<size_t>(k)] += bp;
            else
                acc[static_cast<size_t>(k)] -= bp;
            if (k < n_max) bp *= b;
        }
        if (xi + 1 == next_checkpoint) {
            const Rational norm = (Rational(1) + rat_pow(Q, next_checkpoint)) / (Rational(1) + Q);
            for (int k = 0; k <= n_max; ++k)
                out[static_cast<size_t>(k)].push_back({next_level, acc[static_cast<size_t>(k)] / norm});
            ++next_level;
            if (next_level > level_hi) break;
            next_checkpoint *= p;
        }
    }
    return out;
}

Rational qeuler(int n, const Rational& q, long alpha) {
    if (n < 0) throw std::invalid_argument("q-Euler index must be >= 0");
    if (alpha < 1) throw std::invalid_argument("weight must be >= 1");
    if (q == 1) throw std::domain_error("q-Euler closed form needs q != 1");
    const Rational qa = rat_pow(q, alpha);
    const Rational two_q = Rational(1) + q;
    Rational acc(0);
    for (int l = 0; l <= n; ++l) {
        const Rational den = Rational(1) + rat_pow(qa, l);
        if (den == 0) throw std::domain_error("q-Euler pole: 1 + q^{alpha l} = 0");
        Rational term = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l))) *
                        two_q / den;
        if (l % 2 == 1) term = -term;
        acc += term;
    }
    return acc / rat_pow(Rational(1) - qa, n);
}

Rational prop1_residual(int n, const Rational& q, long alpha) {
    QWeightParams params;
    params.q = q;
    params.alpha = alpha;
    params.beta = 1;
    return qeuler(n, q, alpha) - qgenocchi(n + 1, params) / Rational(n + 1);
}

Rational classical_number(ClassicalKind kind, int n) {
    if (n < 0) throw std::invalid_argument("classical index must be >= 0");
    SeriesKind sk = SeriesKind::Genocchi;
    if (kind == ClassicalKind::Euler) sk = SeriesKind::Euler;
    if (kind == ClassicalKind::Bernoulli) sk = SeriesKind::Bernoulli;
    return series_coeffs(sk, n).back();
}

Rational qgenocchi_limit_q1(int n, long alpha, long beta) {
    if (n < 0) throw std::invalid_argument("q-Genocchi index must be >= 0");
    if (alpha < 1 || beta < 1) throw std::invalid_argument("weights must be >= 1");
    if (n == 0) return Rational(0);
    const int k = n - 1;  // moment index
    const int ord = k + 4;
    // In t = q-1: numerator sum_l C(k,l)(-1)^l (1+(1+t)^beta)/(1+(1+t)^{alpha l}),
    // denominator (1-(1+t)^alpha)^k. Both vanish to order exactly k at t = 0;
    // the constant term of the quotient is the q->1 limit of the k-th moment.
    PowerSeries num(ord);
    const PowerSeries two_q_beta =
        PowerSeries::binomial_power(beta, ord) + PowerSeries::constant(1, ord);
    for (int l = 0; l <= k; ++l) {
        const PowerSeries den =
            PowerSeries::binomial_power(alpha * l, ord) + PowerSeries::constant(1, ord);
        PowerSeries term = Rational(binomial(static_cast<unsigned long>(k),
                                             static_cast<unsigned long>(l))) *
                           (two_q_beta / den);
        if (l % 2 == 1) term = Rational(-1) * term;
        num = num + term;
    }
    PowerSeries base = PowerSeries::constant(1, ord) - PowerSeries::binomial_power(alpha, ord);
    PowerSeries den = PowerSeries::constant(1, ord);
    for (int i = 0; i < k; ++i) den = den * base;
    if (den.low_order() != k) throw std::logic_error("q->1 denominator order mismatch");
    if (num.low_order() < k) throw std::logic_error("q->1 numerator fails to cancel");
    const PowerSeries quotient = num / den;
    return Rational(n) * quotient.coeff(0);
}

std::vector<Rational> genocchi_table(int n_max, const QWeightParams& params, const Integer& x) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(qgenocchi(n, x, params));
    return out;
}

std::vector<Rational> qeuler_table(int n_max, const Rational& q, long alpha) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(qeuler(n, q, alpha));
    return out;
}

}  // namespace qgamma
