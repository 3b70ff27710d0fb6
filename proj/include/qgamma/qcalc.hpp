#pragma once

#include "qgamma/padic.hpp"
#include "qgamma/rational.hpp"
#include "qgamma/summation.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qgamma {

enum class BracketSign { Plus, Minus };

// [x]_q = (1-q^x)/(1-q) and [x]_{-q} = (1-(-q)^x)/(1+q), exact for integer x.
// q == 1 (Plus) degenerates to x itself.
Rational q_bracket(const Rational& q, const Integer& x, BracketSign sign = BracketSign::Plus);
double q_bracket(double q, double x);  // real carrier, Plus sign, q in (0,1]
// p-adic carrier via q_pow; non-integer x inherits its preconditions. q != 1.
PadicNumber q_bracket(const PadicNumber& q, const Rational& x);

// Shared parameter pack: exact q plus the two integer weights. The context is
// only consulted by the p-adic backends.
struct QWeightParams {
    Rational q = rat(1, 2);
    long alpha = 1;
    long beta = 1;
    ContextPtr context;

    Rational q_alpha() const { return rat_pow(q, alpha); }
    Rational q_beta() const { return rat_pow(q, beta); }

    // p-adic admissibility: context present, q a unit with v_p(q-1) >= min_level.
    void require_padic(int min_level = 1) const;
    // real admissibility: 0 < q < 1, or q == 1 when allow_one.
    void require_real(bool allow_one = false) const;
};

// Integrands for the measure-theoretic operators:
//   BracketPoly  f(x) = sum_k coeffs[k] * [shift + x]_{q^alpha}^k
//   ExpIntegrand f(x) = base^x
struct BracketPoly {
    std::vector<Rational> coeffs;
    Integer shift = 0;
};
struct ExpIntegrand {
    Rational base;
};
struct IntegrandSpec {
    std::variant<BracketPoly, ExpIntegrand> f = BracketPoly{{Rational(1)}, 0};
    bool twist = false;  // multiply by Q^{-x}, Q being the measure parameter

    // Mini-format: "poly:[c0,c1,...]" (optional "@shift") or "exp:a", with an
    // optional ";twist" suffix. Example: "poly:[0,1,2]@3;twist".
    static IntegrandSpec parse(const std::string& text);
    std::string render() const;
};

// Exact value of f at integer x >= 0 under parameter q^alpha.
Rational eval_integrand(const IntegrandSpec& spec, const QWeightParams& params, const Integer& x);

// One exact fermionic Riemann level sum per N in [level_lo, level_hi]:
//   S_N = (1/[p^N]_{-Q}) * sum_{x<p^N} w(x) f(x) (-Q)^x,  w = Q^{-x} if twisted.
// Q is q^beta for the twisted operator and q for the plain one. Throws
// std::length_error if p^level_hi exceeds the term cap (QGAMMA_MAX_TERMS,
// default 2'000'000).
struct LevelValue {
    int level;
    Rational value;
};
std::vector<LevelValue> fermionic_riemann_levels(const IntegrandSpec& spec,
                                                 const QWeightParams& params,
                                                 const Rational& Q, long p,
                                                 int level_lo, int level_hi);

// Plain fermionic integral of f d mu_{-q} (no twist), p-adic Riemann backend.
std::vector<LevelValue> fermionic_integral_padic(const IntegrandSpec& spec,
                                                 const QWeightParams& params,
                                                 int level_lo, int level_hi);

// Twisted operator: integral of Q^{-x} f(x) d mu_{-Q}(x) with Q = q^beta.
std::vector<LevelValue> twisted_integral_levels(const IntegrandSpec& spec,
                                                const QWeightParams& params,
                                                int level_lo, int level_hi);

// Bosonic (Volkenborn-normalized) sums (1/p^N) sum_{x<p^N} f(x) at q = 1.
std::vector<LevelValue> bosonic_riemann_levels(const IntegrandSpec& spec, long p,
                                               int level_lo, int level_hi);

// Real-carrier integral via Abel summation: (1+Q) * sum_{x>=0} (-1)^x w(x) f(x).
struct AbelIntegral {
    double value = 0.0;
    SummationOutcome outcome;
};
AbelIntegral fermionic_integral_real(const IntegrandSpec& spec, const QWeightParams& params,
                                     SumMethod method, double tol);

// Closed form of the untwisted exponential moment: integral of a^x d mu_{-q^beta}
// equals [2]_{q^beta} / (1 + a q^beta). The p-adic reading needs a*q^beta = 1 (mod p).
Rational exp_moment(const Rational& a, const Rational& q, long beta);
double exp_moment(double a, double q, long beta);

// Closed form of the twisted bracket moment
//   M_k(x) = integral of q^{-beta t} [x+t]_{q^alpha}^k d mu_{-q^beta}(t)
//          = (1/(1-q^alpha)^k) sum_{l<=k} C(k,l) (-1)^l q^{alpha l x} [2]_{q^beta} / (1+q^{alpha l}).
// Requires q != 1 (use the series limit for q -> 1).
Rational twisted_bracket_moment(int k, const Integer& x, const QWeightParams& params);

// Residual of the n-step shift identity for the twisted operator:
//   J(f(n+.)) + (-1)^{n-1} J(f) - [2]_{q^beta} sum_{l<n} (-1)^{n-1-l} f(l).
// Closed backend is exact (expected identically zero); the level backend
// substitutes level-N Riemann values for J; the real backend Abel-sums J.
Rational shift_identity_residual_closed(const BracketPoly& f, int n, const QWeightParams& params);
Rational shift_identity_residual_level(const BracketPoly& f, int n, const QWeightParams& params, int level);
double shift_identity_residual_real(const BracketPoly& f, int n, const QWeightParams& params,
                                    SumMethod method, double tol);

}  // namespace qgamma
