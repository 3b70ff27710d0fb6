#pragma once

#include "qgamma/qcalc.hpp"

#include <utility>
#include <vector>

namespace qgamma {

// The three integral log-gamma variants:
//   Kim:               integral of [x+t] (log [x+t] - 1) d mu_{-q}(t), weight 1
//   WeightedAlpha:     same kernel with [.]_{q^alpha}, measure mu_{-q}
//   WeightedAlphaBeta: kernel [.]_{q^alpha}, twist q^{-beta t}, measure mu_{-q^beta}
enum class LogGammaMode { Kim, WeightedAlpha, WeightedAlphaBeta };

LogGammaMode parse_log_gamma_mode(const std::string& name);  // "kim" | "alpha" | "alpha-beta"
std::string to_string(LogGammaMode mode);

// Index convention for the expansion series. Derived is the convention this
// library validates; Paper keeps the alternative one selectable.
enum class Variant { Paper, Derived };
std::string to_string(Variant v);

struct RealEval {
    double value = 0.0;
    SummationOutcome outcome;
};

// Real-carrier evaluation (0 < q < 1, or q == 1 for the classical limit, where
// only the Euler-transform method applies). x > 0.
RealEval log_gamma_real(const Rational& x, const QWeightParams& params, LogGammaMode mode,
                        SumMethod method, double tol);

// p-adic evaluation: level-N twisted/plain Riemann sums of the kernel, one per
// level in [lo, hi]. x must be a positive integer or have negative valuation.
std::vector<std::pair<int, PadicNumber>> log_gamma_padic(const Rational& x,
                                                         const QWeightParams& params,
                                                         LogGammaMode mode, int lo, int hi);

// Functional-equation residual G(x+1) + G(x) - [2]_{q^beta} [x]_{q^alpha} (log [x]_{q^alpha} - 1)
// for the WeightedAlphaBeta object.
double thm1_residual_real(const Rational& x, const QWeightParams& params, SumMethod method,
                          double tol);
std::vector<std::pair<int, PadicNumber>> thm1_residual_padic(const Rational& x,
                                                             const QWeightParams& params,
                                                             int lo, int hi);

// Expansion of the WeightedAlphaBeta log-gamma around [x]:
//   ( [2]_{q^beta}/2 [x] + q^{alpha x} g_2/2 ) log [x]
//   + sum_{n>=1} (-q^{alpha x})^{n+1} g_{idx(n)} / (n(n+1)(n+2) [x]^n) - [2]_{q^beta}/2 [x]
// with idx(n) = n+2 (Derived) or n+1 (Paper); g are the weighted q-Genocchi
// numbers at 0. Requires the contraction predicate q^{alpha x} sup|[t]| < [x].
struct SeriesEvalReal {
    double value = 0.0;
    int terms_used = 0;
    double predicate_ratio = 0.0;  // q^{alpha x} / (1 - q^{alpha x}); must be < 1
};
SeriesEvalReal series_rhs(const Rational& x, const QWeightParams& params, int trunc, Variant v);

// Euler-number form (beta == 1): coefficients xi_n with
//   ( [2]_q/2 [x] + q^{alpha x} xi_1 ) log [x]
//   + sum_{n>=1} (-q^{alpha x})^{n+1} xi_{idx(n)} / (n(n+1) [x]^n) - [2]_q/2 [x],
// idx(n) = n+1 (Derived) or n (Paper).
SeriesEvalReal series_rhs_euler(const Rational& x, const QWeightParams& params, int trunc,
                                Variant v);

struct SeriesEvalPadic {
    PadicNumber value;
    int terms_used = 0;
    long predicate_valuation = 0;  // v_p(q^{alpha x}) - v_p([x]); must be >= 1
};
SeriesEvalPadic series_rhs_padic(const Rational& x, const QWeightParams& params, int trunc,
                                 Variant v);
SeriesEvalPadic series_rhs_euler_padic(const Rational& x, const QWeightParams& params, int trunc,
                                       Variant v);

// q -> 1 classical forms (asymptotic in 1/x; summation truncates at the
// smallest term when that comes before `trunc`):
//   Genocchi form: (x + G_2/2) log x + sum (-1)^{n+1} G_{idx}/(n(n+1)(n+2) x^n) - x
//   Euler form:    (x + E_1)   log x + sum (-1)^{n+1} E_{idx}/(n(n+1) x^n)      - x
enum class CorollaryKind { Genocchi, Euler };
double classical_series_rhs(double x, int trunc, CorollaryKind kind, Variant v);

// Stirling-type series (x - 1/2) log x - x + sum_{n<=n_max} (-1)^{n+1} B_{n+1}/(n(n+1) x^n),
// approximating log(Gamma(x)/sqrt(2 pi)). n_max <= 12.
double stirling(double x, int n_max);
double stirling_reference(double x);                    // lgamma(x) - log(2 pi)/2
double stirling_error(double x, int n_max);             // |series - reference|, extended precision
double stirling_first_omitted(double x, int n_max);     // magnitude of the next nonzero term

// (1+z) log(1+z) - [ z + sum_{n=1}^{trunc} (-1)^{n+1} z^{n+1}/(n(n+1)) ], |z| < 1.
double log_expansion_residual(double z, int trunc);
double log_expansion_tail_bound(double z, int trunc);

// Pointwise residual of the bracket expansion feeding the series theorems:
// [x+t](log [x+t] - 1) against ([x] + q^{alpha x}[t]) log [x]
//   + sum_{n=1}^{trunc} (-q^{alpha x})^{n+1} [t]^{n+1}/(n(n+1)[x]^n) - [x],
// real carrier, integer t >= 0.
double bracket_expansion_residual(const Rational& x, long t, const QWeightParams& params,
                                  int trunc);

}  // namespace qgamma
