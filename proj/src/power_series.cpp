#include "qgamma/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgamma {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::variable(int order) {
    PowerSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

PowerSeries PowerSeries::binomial_power(long e, int order) {
    if (e < 0) throw std::invalid_argument("binomial_power needs e >= 0");
    PowerSeries s(order);
    for (int k = 0; k <= order; ++k) {
        if (k > e) break;
        s.c_[static_cast<size_t>(k)] = Rational(binomial(static_cast<unsigned long>(e),
                                                         static_cast<unsigned long>(k)));
    }
    return s;
}

const Rational& PowerSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
    return c_[static_cast<size_t>(k)];
}

void PowerSeries::set_coeff(int k, const Rational& v) {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
    c_[static_cast<size_t>(k)] = v;
}

int PowerSeries::low_order() const {
    for (int k = 0; k <= order(); ++k)
        if (c_[static_cast<size_t>(k)] != 0) return k;
    return order() + 1;
}

PowerSeries PowerSeries::truncated(int order) const {
    PowerSeries out(order);
    const int n = std::min(order, this->order());
    for (int k = 0; k <= n; ++k) out.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int k = 0; k <= n; ++k) out.c_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int k = 0; k <= n; ++k) out.c_[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            out.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
    PowerSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.c_[static_cast<size_t>(k)] = s * a.coeff(k);
    return out;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    const int j = b.low_order();
    if (j > b.order()) throw std::domain_error("series division by zero");
    if (j > 0 && a.low_order() < j)
        throw std::domain_error("series division: numerator does not cancel the denominator's zero");
    const int n = std::min(a.order(), b.order()) - j;
    if (n < 0) throw std::domain_error("series division: no terms left after cancelling");
    PowerSeries out(n);
    // After the shift the denominator has an invertible constant term.
    const Rational b0 = b.coeff(j);
    for (int k = 0; k <= n; ++k) {
        Rational s = (k + j <= a.order()) ? a.coeff(k + j) : Rational(0);
        for (int i = 1; i <= k; ++i) {
            const int bi = j + i;
            if (bi > b.order()) break;
            s -= b.coeff(bi) * out.c_[static_cast<size_t>(k - i)];
        }
        out.c_[static_cast<size_t>(k)] = s / b0;
    }
    return out;
}

std::vector<Rational> series_coeffs(SeriesKind kind, int n_max) {
    if (n_max < 0) throw std::invalid_argument("series_coeffs needs n_max >= 0");
    const int ord = n_max + 2;
    // e^t and e^t - 1, t/(e^t - 1) etc. assembled exactly; factorials restored at the end.
    PowerSeries expt(ord);
    Rational f(1);
    for (int k = 0; k <= ord; ++k) {
        if (k > 0) f /= k;
        expt.set_coeff(k, f);
    }
    PowerSeries num(ord), den(ord);
    switch (kind) {
        case SeriesKind::Genocchi:
            num = Rational(2) * PowerSeries::variable(ord);
            den = expt + PowerSeries::constant(1, ord);
            break;
        case SeriesKind::Euler:
            num = PowerSeries::constant(2, ord);
            den = expt + PowerSeries::constant(1, ord);
            break;
        case SeriesKind::Bernoulli:
            num = PowerSeries::variable(ord);
            den = expt - PowerSeries::constant(1, ord);
            break;
    }
    const PowerSeries g = num / den;
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    Rational fact(1);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= n;
        if (n > g.order()) throw std::logic_error("series_coeffs truncation too short");
        out.push_back(g.coeff(n) * fact);
    }
    return out;
}

}  // namespace qgamma
