#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qgamma {

// Exact arithmetic carriers. Rational is always kept canonical (gcd 1, den > 0).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den = Integer(1)) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Integer int_pow(long base, unsigned long e) { return int_pow(Integer(base), e); }

// base^e, exact; e < 0 requires base != 0.
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rational(0);
    }
    const bool neg = e < 0;
    const unsigned long k = neg ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    if (neg) {
        if (out == 0) throw std::domain_error("zero to a negative power");
        out = Rational(1) / out;
    }
    return out;  // powers of a canonical rational stay canonical
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// v_p(x) for nonzero x. Throws std::domain_error on x == 0 (valuation is +infinity).
inline long valuation(const Integer& x, long p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    Integer stripped;
    const Integer pp(p);
    return static_cast<long>(mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

inline long valuation(const Rational& x, long p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

// Unit part of x = p^{v_p(x)} * u; returns u.
inline Rational unit_part(const Rational& x, long p) {
    if (x == 0) throw std::domain_error("unit part of zero");
    const Integer pp(p);
    Integer n, d;
    mpz_remove(n.get_mpz_t(), x.get_num().get_mpz_t(), pp.get_mpz_t());
    mpz_remove(d.get_mpz_t(), x.get_den().get_mpz_t(), pp.get_mpz_t());
    return rat(n, d);
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Integer to_integer(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("rational is not an integer");
    return x.get_num();
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Accepts "a" or "a/b" in base 10 with b != 0.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace qgamma
