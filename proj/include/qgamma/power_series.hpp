#pragma once

#include "qgamma/rational.hpp"

#include <vector>

namespace qgamma {

// Truncated power series with exact rational coefficients: sum c_k t^k + O(t^{order+1}).
// `order` is the highest retained exponent.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries variable(int order);             // t
    static PowerSeries binomial_power(long e, int order);  // (1+t)^e, e >= 0

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, const Rational& v);

    // Lowest k with c_k != 0, or order()+1 when identically zero at this truncation.
    int low_order() const;

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    // Division cancels a common leading zero of order j = b.low_order(); a must
    // vanish to order j as well. The result is truncated to min order minus j.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& s, const PowerSeries& a);

private:
    std::vector<Rational> c_;
};

enum class SeriesKind { Genocchi, Euler, Bernoulli };

// First n_max+1 numbers of the chosen family, exact:
//   Genocchi:  2t/(e^t+1) = sum G_n t^n/n!
//   Euler:     2/(e^t+1)  = sum E_n t^n/n!   (values at 0)
//   Bernoulli: t/(e^t-1)  = sum B_n t^n/n!
std::vector<Rational> series_coeffs(SeriesKind kind, int n_max);

}  // namespace qgamma
