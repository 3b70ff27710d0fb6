#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgamma/power_series.hpp"

using namespace qgamma;

TEST_CASE("ring operations") {
    const PowerSeries one = PowerSeries::constant(Rational(1), 4);
    const PowerSeries t = PowerSeries::variable(4);
    const PowerSeries prod = (one + t) * (one - t);
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
    CHECK(prod.coeff(3) == 0);
    CHECK(prod.order() == 4);

    const PowerSeries scaled = rat(3, 2) * t;
    CHECK(scaled.coeff(1) == rat(3, 2));

    PowerSeries s(3);
    s.set_coeff(2, rat(5, 7));
    CHECK(s.low_order() == 2);
    CHECK(PowerSeries(3).low_order() == 4);
    CHECK(s.truncated(1).order() == 1);
}

TEST_CASE("binomial_power expands (1+t)^e") {
    const PowerSeries b = PowerSeries::binomial_power(5, 3);
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(1) == 5);
    CHECK(b.coeff(2) == 10);
    CHECK(b.coeff(3) == 10);
}

TEST_CASE("division cancels matching leading zeros") {
    const PowerSeries t = PowerSeries::variable(6);
    const PowerSeries q = (t * t + t * t * t) / t;  // t + t^2
    CHECK(q.coeff(0) == 0);
    CHECK(q.coeff(1) == 1);
    CHECK(q.coeff(2) == 1);

    // geometric series: 1/(1-t)
    const PowerSeries one = PowerSeries::constant(Rational(1), 6);
    const PowerSeries g = one / (one - t);
    for (int k = 0; k <= g.order(); ++k) CHECK(g.coeff(k) == 1);

    CHECK_THROWS_AS(one / t, std::domain_error);                           // numerator too low
    CHECK_THROWS_AS(one / PowerSeries(6), std::domain_error);              // zero divisor
}

TEST_CASE("Genocchi numbers from the generating function") {
    const auto g = series_coeffs(SeriesKind::Genocchi, 8);
    const long want[] = {0, 1, -1, 0, 1, 0, -3, 0, 17};
    for (int n = 0; n <= 8; ++n) CHECK(g[static_cast<size_t>(n)] == want[n]);
}

TEST_CASE("Euler values at zero from the generating function") {
    const auto e = series_coeffs(SeriesKind::Euler, 7);
    CHECK(e[0] == 1);
    CHECK(e[1] == rat(-1, 2));
    CHECK(e[2] == 0);
    CHECK(e[3] == rat(1, 4));
    CHECK(e[4] == 0);
    CHECK(e[5] == rat(-1, 2));
    CHECK(e[6] == 0);
    CHECK(e[7] == rat(17, 8));
}

TEST_CASE("Bernoulli numbers from the generating function") {
    const auto b = series_coeffs(SeriesKind::Bernoulli, 12);
    CHECK(b[0] == 1);
    CHECK(b[1] == rat(-1, 2));
    CHECK(b[2] == rat(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == rat(-1, 30));
    CHECK(b[12] == rat(-691, 2730));
}

// Independent oracles: the defining recurrences, not the generating functions.
TEST_CASE("Bernoulli recurrence sum_{k<n} C(n,k) B_k = 0") {
    const auto b = series_coeffs(SeriesKind::Bernoulli, 12);
    for (int n = 2; n <= 12; ++n) {
        Rational acc(0);
        for (int k = 0; k < n; ++k)
            acc += Rational(binomial(static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(k))) *
                   b[static_cast<size_t>(k)];
        CHECK(acc == 0);
    }
}

TEST_CASE("Genocchi recurrence sum_k C(n,k) G_k + G_n = 2 [n=1]") {
    const auto g = series_coeffs(SeriesKind::Genocchi, 12);
    for (int n = 1; n <= 12; ++n) {
        Rational acc = g[static_cast<size_t>(n)];
        for (int k = 0; k <= n; ++k)
            acc += Rational(binomial(static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(k))) *
                   g[static_cast<size_t>(k)];
        CHECK(acc == (n == 1 ? 2 : 0));
    }
}

TEST_CASE("Euler recurrence sum_k C(n,k) E_k + E_n = 2 [n=0]") {
    const auto e = series_coeffs(SeriesKind::Euler, 12);
    for (int n = 0; n <= 12; ++n) {
        Rational acc = e[static_cast<size_t>(n)];
        for (int k = 0; k <= n; ++k)
            acc += Rational(binomial(static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(k))) *
                   e[static_cast<size_t>(k)];
        CHECK(acc == (n == 0 ? 2 : 0));
    }
}

TEST_CASE("cross-family identities") {
    const auto g = series_coeffs(SeriesKind::Genocchi, 13);
    const auto e = series_coeffs(SeriesKind::Euler, 12);
    const auto b = series_coeffs(SeriesKind::Bernoulli, 13);
    for (int n = 0; n <= 12; ++n) {
        // E_n = G_{n+1}/(n+1)
        CHECK(e[static_cast<size_t>(n)] ==
              g[static_cast<size_t>(n + 1)] / Rational(n + 1));
    }
    for (int n = 0; n <= 13; ++n) {
        // G_n = 2 (1 - 2^n) B_n
        CHECK(g[static_cast<size_t>(n)] ==
              Rational(2) * (Rational(1) - rat_pow(Rational(2), n)) * b[static_cast<size_t>(n)]);
    }
}
