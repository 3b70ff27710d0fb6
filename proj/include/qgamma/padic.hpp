#pragma once

#include "qgamma/rational.hpp"

#include <memory>
#include <string>

namespace qgamma {

// Fixed odd prime p and working precision M: unit residues are tracked modulo p^M.
class PadicContext {
public:
    PadicContext(long prime, int precision);

    long prime() const { return p_; }
    int precision() const { return prec_; }
    const Integer& modulus() const { return pm_; }

    // p^k for 0 <= k (not capped at precision; used for internal shifts).
    Integer power(long k) const;

    friend bool operator==(const PadicContext& a, const PadicContext& b) {
        return a.p_ == b.p_ && a.prec_ == b.prec_;
    }

private:
    long p_;
    int prec_;
    Integer pm_;
};

using ContextPtr = std::shared_ptr<const PadicContext>;

ContextPtr make_context(long prime, int precision);

// Element of Q_p as p^valuation * unit with the unit held modulo p^M.
// known_digits counts how many base-p digits of the unit are meaningful; the
// represented value is known modulo p^(valuation + known_digits). Exact inputs
// carry known_digits == M; cancellation in addition lowers it. A value whose
// unit is entirely cancelled collapses to the (indistinguishable-from-)zero
// element, which has no valuation.
class PadicNumber {
public:
    static PadicNumber zero(ContextPtr ctx);
    static PadicNumber one(ContextPtr ctx);
    static PadicNumber from_integer(ContextPtr ctx, const Integer& n);
    static PadicNumber from_rational(ContextPtr ctx, const Rational& x);
    // Normalizes: reduces unit mod p^M, strips p factors into the valuation,
    // clamps known_digits to [_, M]; collapses to zero if nothing is known.
    static PadicNumber from_parts(ContextPtr ctx, long valuation, Integer unit, int known_digits);

    bool is_zero() const { return zero_; }
    long valuation() const;        // throws std::domain_error on zero
    const Integer& unit() const;   // throws std::domain_error on zero
    int known_digits() const;      // throws std::domain_error on zero
    const PadicContext& context() const { return *ctx_; }
    const ContextPtr& context_ptr() const { return ctx_; }

    // Exact rational representative p^v * unit of the tracked residue class.
    Rational lift() const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    // "p^v * (d0 + d1*p + ... + O(p^k))" with base-p digits of the unit; "0" for zero.
    std::string str() const;

private:
    PadicNumber() = default;

    ContextPtr ctx_;
    bool zero_ = true;
    long val_ = 0;
    Integer unit_{0};
    int known_ = 0;
};

// v_p(x), or `if_zero` when x collapsed to zero (residual tests: "at least N digits vanish").
long valuation_or(const PadicNumber& x, long if_zero);

// Textual form "a/b" parsed into an exact element (b may be divisible by p; the
// valuation goes negative).
PadicNumber parse_padic(ContextPtr ctx, const std::string& text);

// Teichmuller lift: the unique (p-1)-st root of unity congruent to the unit of u mod p.
// Requires v_p(u) == 0.
PadicNumber teichmuller(const PadicNumber& u);

// Iwasawa branch of the p-adic logarithm: log(p) = 0, log(teichmuller) = 0,
// total on nonzero elements. log(xy) = log x + log y.
PadicNumber iwasawa_log(const PadicNumber& x);

// p-adic exponential; requires v_p(z) >= 1 (p odd) or z == 0.
PadicNumber padic_exp(const PadicNumber& z);

// q^e by exact modular powering (any nonzero q; q == 0 needs e > 0).
PadicNumber q_pow(const PadicNumber& q, const Integer& e);

// q^x = exp(x log q) for non-integer rational x; requires q a unit congruent to
// 1 mod p and v_p(x log q) >= 1. Integer x falls back to the exact path.
PadicNumber q_pow(const PadicNumber& q, const Rational& x);

}  // namespace qgamma
