#include "qgamma/qcalc.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qgamma {

Rational q_bracket(const Rational& q, const Integer& x, BracketSign sign) {
    if (sign == BracketSign::Plus) {
        if (q == 1) return Rational(x);
        if (!x.fits_slong_p()) throw std::invalid_argument("bracket exponent out of range");
        return (Rational(1) - rat_pow(q, x.get_si())) / (Rational(1) - q);
    }
    if (q == -1) throw std::domain_error("[x]_{-q} undefined at q = -1");
    if (!x.fits_slong_p()) throw std::invalid_argument("bracket exponent out of range");
    return (Rational(1) - rat_pow(-q, x.get_si())) / (Rational(1) + q);
}

double q_bracket(double q, double x) {
    if (q == 1.0) return x;
    if (!(q > 0.0))
        throw std::domain_error("real bracket needs q > 0");
    return (1.0 - std::pow(q, x)) / (1.0 - q);
}

PadicNumber q_bracket(const PadicNumber& q, const Rational& x) {
    const PadicNumber one = PadicNumber::one(q.context_ptr());
    const PadicNumber den = one - q;
    if (den.is_zero()) throw std::domain_error("p-adic bracket needs q != 1");
    return (one - q_pow(q, x)) / den;
}

void QWeightParams::require_padic(int min_level) const {
    if (!context) throw std::invalid_argument("p-adic backend needs a context");
    if (alpha < 1 || beta < 1) throw std::invalid_argument("weights must be >= 1");
    if (q == 1) throw std::domain_error("p-adic backend needs q != 1");
    const long p = context->prime();
    if (valuation(q, p) != 0) throw std::domain_error("q must be a p-adic unit");
    const Rational qm1 = q - 1;
    if (qm1 == 0 || valuation(qm1, p) < min_level)
        throw std::domain_error("q must satisfy v_p(q-1) >= " + std::to_string(min_level));
}

void QWeightParams::require_real(bool allow_one) const {
    if (alpha < 1 || beta < 1) throw std::invalid_argument("weights must be >= 1");
    if (q == 1 && allow_one) return;
    if (!(q > 0 && q < 1)) throw std::domain_error("real backend needs 0 < q < 1");
}

IntegrandSpec IntegrandSpec::parse(const std::string& text) {
    IntegrandSpec spec;
    std::string body = text;
    const auto semi = body.find(';');
    if (semi != std::string::npos) {
        const std::string flag = body.substr(semi + 1);
        if (flag != "twist") throw std::invalid_argument("unknown integrand flag: '" + flag + "'");
        spec.twist = true;
        body = body.substr(0, semi);
    }
    if (body.rfind("exp:", 0) == 0) {
        spec.f = ExpIntegrand{parse_rational(body.substr(4))};
        return spec;
    }
    if (body.rfind("poly:", 0) != 0)
        throw std::invalid_argument("integrand must start with 'poly:' or 'exp:'");
    body = body.substr(5);
    Integer shift(0);
    const auto at = body.find('@');
    if (at != std::string::npos) {
        shift = to_integer(parse_rational(body.substr(at + 1)));
        body = body.substr(0, at);
    }
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("poly integrand needs a [c0,c1,...] coefficient list");
    body = body.substr(1, body.size() - 2);
    BracketPoly poly;
    poly.shift = shift;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ','))
        poly.coeffs.push_back(parse_rational(item));
    if (poly.coeffs.empty()) throw std::invalid_argument("poly integrand needs at least one coefficient");
    spec.f = std::move(poly);
    return spec;
}

std::string IntegrandSpec::render() const {
    std::ostringstream os;
    if (const auto* poly = std::get_if<BracketPoly>(&f)) {
        os << "poly:[";
        for (size_t i = 0; i < poly->coeffs.size(); ++i)
            os << (i ? "," : "") << to_string(poly->coeffs[i]);
        os << "]";
        if (poly->shift != 0) os << "@" << poly->shift.get_str();
    } else {
        os << "exp:" << to_string(std::get<ExpIntegrand>(f).base);
    }
    if (twist) os << ";twist";
    return os.str();
}

Rational eval_integrand(const IntegrandSpec& spec, const QWeightParams& params, const Integer& x) {
    if (const auto* poly = std::get_if<BracketPoly>(&spec.f)) {
        const Rational b = q_bracket(params.q_alpha(), Integer(poly->shift + x));
        Rational acc(0);
        for (size_t i = poly->coeffs.size(); i-- > 0;) acc = acc * b + poly->coeffs[i];
        return acc;
    }
    const auto& e = std::get<ExpIntegrand>(spec.f);
    if (!x.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    return rat_pow(e.base, x.get_si());
}

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

// [p^N]_{-Q} = (1 + Q^{p^N}) / (1 + Q)
Rational minus_bracket_of_power(const Rational& Q, long pN) {
    const Rational qp = rat_pow(Q, pN);
    const Rational den = Rational(1) + Q;
    if (den == 0) throw std::domain_error("[p^N]_{-q} undefined at q = -1");
    return (Rational(1) + qp) / den;
}

}  // namespace

std::vector<LevelValue> fermionic_riemann_levels(const IntegrandSpec& spec,
                                                 const QWeightParams& params,
                                                 const Rational& Q, long p,
                                                 int level_lo, int level_hi) {
    if (level_lo < 1 || level_hi < level_lo) throw std::invalid_argument("bad level range");
    const long cap = term_cap();
    const long total = checked_pow(p, level_hi, cap);

    const Rational qa = params.q_alpha();
    const bool q_is_one = (params.q == 1);
    const auto* poly = std::get_if<BracketPoly>(&spec.f);
    const auto* expf = std::get_if<ExpIntegrand>(&spec.f);

    // Incremental state: t = q^{alpha(shift+x)}, apow = base^x, w = weight.
    Rational t(1), one_minus_qa(0);
    if (poly && !q_is_one) {
        if (!poly->shift.fits_slong_p()) throw std::invalid_argument("shift out of range");
        t = rat_pow(qa, poly->shift.get_si());
        one_minus_qa = Rational(1) - qa;
    }
    Rational apow(1);
    Rational w(1);  // untwisted weight (-Q)^x; twisted weight is (-1)^x folded as a sign
    const Rational negQ = -Q;

    Rational acc(0);
    std::vector<LevelValue> out;
    long next_checkpoint = checked_pow(p, level_lo, cap);
    int next_level = level_lo;
    for (long x = 0; x < total; ++x) {
        Rational fx;
        if (poly) {
            Rational b = q_is_one ? Rational(poly->shift + x) : (Rational(1) - t) / one_minus_qa;
            Rational h(0);
            for (size_t i = poly->coeffs.size(); i-- > 0;) h = h * b + poly->coeffs[i];
            fx = std::move(h);
            if (!q_is_one) t *= qa;
        } else {
            fx = apow;
            apow *= expf->base;
        }
        if (spec.twist) {
            if (x % 2 == 0)
                acc += fx;
            else
                acc -= fx;
        } else {
            acc += w * fx;
            w *= negQ;
        }
        if (x + 1 == next_checkpoint) {
            out.push_back({next_level, acc / minus_bracket_of_power(Q, next_checkpoint)});
            ++next_level;
            if (next_level > level_hi) break;
            next_checkpoint *= p;
        }
    }
    return out;
}

std::vector<LevelValue> fermionic_integral_padic(const IntegrandSpec& spec,
                                                 const QWeightParams& params,
                                                 int level_lo, int level_hi) {
    params.require_padic();
    IntegrandSpec plain = spec;
    plain.twist = false;
    return fermionic_riemann_levels(plain, params, params.q, params.context->prime(),
                                    level_lo, level_hi);
}

std::vector<LevelValue> twisted_integral_levels(const IntegrandSpec& spec,
                                                const QWeightParams& params,
                                                int level_lo, int level_hi) {
    params.require_padic();
    IntegrandSpec twisted = spec;
    twisted.twist = true;
    return fermionic_riemann_levels(twisted, params, params.q_beta(), params.context->prime(),
                                    level_lo, level_hi);
}

std::vector<LevelValue> bosonic_riemann_levels(const IntegrandSpec& spec, long p,
                                               int level_lo, int level_hi) {
    if (level_lo < 1 || level_hi < level_lo) throw std::invalid_argument("bad level range");
    const long cap = term_cap();
    const long total = checked_pow(p, level_hi, cap);
    const auto* poly = std::get_if<BracketPoly>(&spec.f);
    const auto* expf = std::get_if<ExpIntegrand>(&spec.f);

    Rational apow(1);
    Rational acc(0);
    std::vector<LevelValue> out;
    long next_checkpoint = checked_pow(p, level_lo, cap);
    int next_level = level_lo;
    for (long x = 0; x < total; ++x) {
        if (poly) {
            const Rational b(poly->shift + x);  // q = 1 semantics
            Rational h(0);
            for (size_t i = poly->coeffs.size(); i-- > 0;) h = h * b + poly->coeffs[i];
            acc += h;
        } else {
            acc += apow;
            apow *= expf->base;
        }
        if (x + 1 == next_checkpoint) {
            out.push_back({next_level, acc / Rational(next_checkpoint)});
            ++next_level;
            if (next_level > level_hi) break;
            next_checkpoint *= p;
        }
    }
    return out;
}

AbelIntegral fermionic_integral_real(const IntegrandSpec& spec, const QWeightParams& params,
                                     SumMethod method, double tol) {
    params.require_real(true);
    const Rational Q = spec.twist ? params.q_beta() : params.q;
    const double Qd = Q.get_d();
    const double qa = params.q_alpha().get_d();
    const bool q_is_one = (params.q == 1);

    const auto* poly = std::get_if<BracketPoly>(&spec.f);
    const auto* expf = std::get_if<ExpIntegrand>(&spec.f);
    const double shift = poly ? Rational(poly->shift).get_d() : 0.0;

    auto fx = [&](long x) {
        if (poly) {
            const double b = q_is_one ? shift + static_cast<double>(x)
                                      : q_bracket(qa, shift + static_cast<double>(x));
            double h = 0.0;
            for (size_t i = poly->coeffs.size(); i-- > 0;) h = h * b + poly->coeffs[i].get_d();
            return h;
        }
        return std::pow(expf->base.get_d(), static_cast<double>(x));
    };

    AlternatingSeries series;
    std::optional<double> limit;
    if (spec.twist || Q == 1) {
        series.term = fx;
        if (poly) {
            if (!q_is_one) {
                const double binf = 1.0 / (1.0 - qa);
                double h = 0.0;
                for (size_t i = poly->coeffs.size(); i-- > 0;) h = h * binf + poly->coeffs[i].get_d();
                limit = h;
            } else if (poly->coeffs.size() == 1) {
                limit = poly->coeffs[0].get_d();
            }  // unbounded otherwise: leave unset
        } else {
            const Rational& a = expf->base;
            if (a < 1 && a > -1)
                limit = 0.0;
            else if (a == 1)
                limit = 1.0;
        }
    } else {
        series.term = [&, fx](long x) { return std::pow(Qd, static_cast<double>(x)) * fx(x); };
        if (expf) {
            const Rational r = expf->base * Q;
            if (r < 1 && r > -1)
                limit = 0.0;
            else if (r == 1)
                limit = 1.0;
        } else {
            limit = 0.0;  // bounded bracket polynomial damped by Q^x
        }
    }
    series.limit = limit;

    AbelIntegral out;
    out.outcome = sum_alternating(series, method, tol);
    out.value = (1.0 + Qd) * out.outcome.value;
    return out;
}

Rational exp_moment(const Rational& a, const Rational& q, long beta) {
    const Rational qb = rat_pow(q, beta);
    const Rational den = Rational(1) + a * qb;
    if (den == 0) throw std::domain_error("exponential moment pole: 1 + a q^beta = 0");
    return (Rational(1) + qb) / den;
}

double exp_moment(double a, double q, long beta) {
    const double qb = std::pow(q, static_cast<double>(beta));
    const double den = 1.0 + a * qb;
    if (den == 0.0) throw std::domain_error("exponential moment pole: 1 + a q^beta = 0");
    return (1.0 + qb) / den;
}

Rational twisted_bracket_moment(int k, const Integer& x, const QWeightParams& params) {
    if (k < 0) throw std::invalid_argument("moment index must be >= 0");
    if (params.q == 1) throw std::domain_error("closed moment needs q != 1 (take the q->1 limit)");
    if (!x.fits_slong_p()) throw std::invalid_argument("moment shift out of range");
    const long xl = x.get_si();
    const Rational qa = params.q_alpha();
    const Rational two_q_beta = Rational(1) + params.q_beta();
    Rational acc(0);
    for (int l = 0; l <= k; ++l) {
        const Rational qal = rat_pow(qa, l);
        const Rational den = Rational(1) + qal;
        if (den == 0) throw std::domain_error("twisted moment pole: 1 + q^{alpha l} = 0");
        Rational term = Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(l))) *
                        rat_pow(qa, l * xl) * two_q_beta / den;
        if (l % 2 == 1) term = -term;
        acc += term;
    }
    return acc / rat_pow(Rational(1) - qa, k);
}

namespace {

Rational shift_rhs(const BracketPoly& f, int n, const QWeightParams& params) {
    IntegrandSpec spec;
    spec.f = f;
    Rational rhs(0);
    for (int l = 0; l < n; ++l) {
        Rational term = eval_integrand(spec, params, Integer(l));
        if ((n - 1 - l) % 2 == 1) term = -term;
        rhs += term;
    }
    return (Rational(1) + params.q_beta()) * rhs;
}

Rational closed_twisted_value(const BracketPoly& f, const Integer& extra_shift,
                              const QWeightParams& params) {
    Rational acc(0);
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
        if (f.coeffs[k] == 0) continue;
        acc += f.coeffs[k] * twisted_bracket_moment(static_cast<int>(k),
                                                    Integer(f.shift + extra_shift), params);
    }
    return acc;
}

}  // namespace

Rational shift_identity_residual_closed(const BracketPoly& f, int n, const QWeightParams& params) {
    if (n < 1) throw std::invalid_argument("shift count must be >= 1");
    const Rational Jn = closed_twisted_value(f, Integer(n), params);
    const Rational J = closed_twisted_value(f, Integer(0), params);
    const Rational lhs = (n % 2 == 1) ? Rational(Jn + J) : Rational(Jn - J);
    return lhs - shift_rhs(f, n, params);
}

Rational shift_identity_residual_level(const BracketPoly& f, int n, const QWeightParams& params,
                                       int level) {
    if (n < 1) throw std::invalid_argument("shift count must be >= 1");
    IntegrandSpec spec;
    spec.f = f;
    IntegrandSpec shifted = spec;
    std::get<BracketPoly>(shifted.f).shift += n;
    const Rational Jn = twisted_integral_levels(shifted, params, level, level).front().value;
    const Rational J = twisted_integral_levels(spec, params, level, level).front().value;
    const Rational lhs = (n % 2 == 1) ? Rational(Jn + J) : Rational(Jn - J);
    return lhs - shift_rhs(f, n, params);
}

double shift_identity_residual_real(const BracketPoly& f, int n, const QWeightParams& params,
                                    SumMethod method, double tol) {
    if (n < 1) throw std::invalid_argument("shift count must be >= 1");
    IntegrandSpec spec;
    spec.f = f;
    spec.twist = true;
    IntegrandSpec shifted = spec;
    std::get<BracketPoly>(shifted.f).shift += n;
    const double Jn = fermionic_integral_real(shifted, params, method, tol).value;
    const double J = fermionic_integral_real(spec, params, method, tol).value;
    const double lhs = (n % 2 == 1) ? Jn + J : Jn - J;
    return lhs - shift_rhs(f, n, params).get_d();
}

}  // namespace qgamma
