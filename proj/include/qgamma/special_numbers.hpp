#pragma once

#include "qgamma/power_series.hpp"
#include "qgamma/qcalc.hpp"

#include <vector>

namespace qgamma {

// Weighted q-Genocchi polynomial g_{n,q}^{(alpha,beta)}(x), exact. g_0 = 0 and
// for n >= 1 the value is n times the (n-1)-st twisted bracket moment at x:
//   g_{n+1,q}^{(alpha,beta)}(x)/(n+1) = integral of q^{-beta t}[x+t]_{q^alpha}^n d mu_{-q^beta}(t).
Rational qgenocchi(int n, const Integer& x, const QWeightParams& params);
Rational qgenocchi(int n, const QWeightParams& params);  // x = 0

// Independent integral oracle: exact level-N Riemann values of the moment
// integral above (compare with qgenocchi(n+1, x)/(n+1); agreement sharpens as
// the level grows).
std::vector<LevelValue> qgenocchi_oracle(int n, const Integer& x, const QWeightParams& params,
                                         int level_lo, int level_hi);
// Same, for all moment indices 0..n_max in one sweep (shares the bracket powers).
std::vector<std::vector<LevelValue>> qgenocchi_oracle_table(int n_max, const Integer& x,
                                                            const QWeightParams& params,
                                                            int level_lo, int level_hi);

// Weighted q-Euler number (values at 0) with weight alpha:
//   xi_n(q; alpha) = (1/(1-q^alpha)^n) sum_{l<=n} C(n,l) (-1)^l (1+q)/(1+q^{alpha l}).
// Requires q != 1.
Rational qeuler(int n, const Rational& q, long alpha);

// Residual of the interpolation identity xi_n(q; alpha) - g_{n+1,q}^{(alpha,1)}/(n+1); exact.
Rational prop1_residual(int n, const Rational& q, long alpha);

enum class ClassicalKind { Genocchi, Euler, Bernoulli };
// Classical number from its exponential generating function, exact.
Rational classical_number(ClassicalKind kind, int n);

// limit_{q->1} g_{n,q}^{(alpha,beta)}(0), exact, via truncated power series in
// t = q-1. The truncation order is raised automatically when needed; the limit
// is independent of alpha and beta and equals the classical Genocchi number.
Rational qgenocchi_limit_q1(int n, long alpha, long beta);

std::vector<Rational> genocchi_table(int n_max, const QWeightParams& params,
                                     const Integer& x = Integer(0));
std::vector<Rational> qeuler_table(int n_max, const Rational& q, long alpha);

}  // namespace qgamma
