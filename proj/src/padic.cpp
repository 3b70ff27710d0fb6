#include "qgamma/padic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qgamma {

namespace {

Integer mod_reduce(const Integer& x, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // nonnegative remainder
    return r;
}

Integer mod_inverse(const Integer& x, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible modulo p^k");
    return r;
}

Integer mod_pow(const Integer& base, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

long ilog(long p, long n) {  // floor(log_p(n)), n >= 1
    long k = 0;
    long v = 1;
    while (v <= n / p) {
        v *= p;
        ++k;
    }
    return k;
}

}  // namespace

PadicContext::PadicContext(long prime, int precision) : p_(prime), prec_(precision) {
    if (prime < 3) throw std::invalid_argument("prime must be an odd prime >= 3");
    const Integer pp(prime);
    if (mpz_probab_prime_p(pp.get_mpz_t(), 32) == 0)
        throw std::invalid_argument("modulus base is not prime");
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    pm_ = int_pow(prime, static_cast<unsigned long>(precision));
}

Integer PadicContext::power(long k) const {
    if (k < 0) throw std::invalid_argument("negative power of p");
    return int_pow(p_, static_cast<unsigned long>(k));
}

ContextPtr make_context(long prime, int precision) {
    return std::make_shared<PadicContext>(prime, precision);
}

PadicNumber PadicNumber::zero(ContextPtr ctx) {
    PadicNumber z;
    z.ctx_ = std::move(ctx);
    return z;
}

PadicNumber PadicNumber::one(ContextPtr ctx) {
    return from_parts(std::move(ctx), 0, Integer(1), std::numeric_limits<int>::max());
}

PadicNumber PadicNumber::from_parts(ContextPtr ctx, long valuation, Integer unit, int known_digits) {
    if (!ctx) throw std::invalid_argument("null p-adic context");
    const int prec = ctx->precision();
    known_digits = std::min(known_digits, prec);
    unit = mod_reduce(unit, ctx->modulus());
    if (unit == 0 || known_digits <= 0) return zero(std::move(ctx));
    const long carried = qgamma::valuation(unit, ctx->prime());
    if (carried > 0) {
        // A p-divisible "unit" means the low digits vanish: shift them into the
        // valuation and drop the corresponding knowledge.
        valuation += carried;
        mpz_divexact(unit.get_mpz_t(), unit.get_mpz_t(), ctx->power(carried).get_mpz_t());
        const long kd = std::min(static_cast<long>(known_digits) - carried, static_cast<long>(prec));
        if (kd <= 0) return zero(std::move(ctx));
        known_digits = static_cast<int>(kd);
    }
    PadicNumber r;
    r.ctx_ = std::move(ctx);
    r.zero_ = false;
    r.val_ = valuation;
    r.unit_ = std::move(unit);
    r.known_ = known_digits;
    return r;
}

PadicNumber PadicNumber::from_integer(ContextPtr ctx, const Integer& n) {
    if (n == 0) return zero(std::move(ctx));
    const long v = qgamma::valuation(n, ctx->prime());
    Integer u;
    mpz_divexact(u.get_mpz_t(), n.get_mpz_t(), ctx->power(v).get_mpz_t());
    return from_parts(std::move(ctx), v, std::move(u), ctx->precision());
}

PadicNumber PadicNumber::from_rational(ContextPtr ctx, const Rational& x) {
    if (x == 0) return zero(std::move(ctx));
    const long p = ctx->prime();
    const Integer pp(p);
    Integer n, d;
    const long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), x.get_num().get_mpz_t(), pp.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), x.get_den().get_mpz_t(), pp.get_mpz_t()));
    const Integer& m = ctx->modulus();
    Integer u = mod_reduce(n, m) * mod_inverse(mod_reduce(d, m), m);
    return from_parts(std::move(ctx), vn - vd, std::move(u), ctx->precision());
}

long PadicNumber::valuation() const {
    if (zero_) throw std::domain_error("valuation of zero");
    return val_;
}

const Integer& PadicNumber::unit() const {
    if (zero_) throw std::domain_error("unit of zero");
    return unit_;
}

int PadicNumber::known_digits() const {
    if (zero_) throw std::domain_error("known digits of zero");
    return known_;
}

Rational PadicNumber::lift() const {
    if (zero_) return Rational(0);
    Rational r(unit_);
    if (val_ >= 0) return r * Rational(ctx_->power(val_));
    return r / Rational(ctx_->power(-val_));
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    return from_parts(ctx_, val_, ctx_->modulus() - unit_, known_);
}

namespace {

void require_same_context(const PadicNumber& a, const PadicNumber& b) {
    if (!(a.context() == b.context())) throw std::invalid_argument("p-adic context mismatch");
}

}  // namespace

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    require_same_context(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const PadicContext& C = a.context();
    const long va = a.valuation(), vb = b.valuation();
    const long v = std::min(va, vb);
    // The sum's value is known modulo p^K only.
    const long K = std::min(va + a.known_digits(), vb + b.known_digits());
    const long cap = K - v;  // meaningful digits above p^v; <= precision by construction
    if (cap <= 0) return PadicNumber::zero(a.context_ptr());
    const long da = va - v, db = vb - v;
    if (da >= cap) return PadicNumber::from_parts(a.context_ptr(), vb, b.unit(), static_cast<int>(cap));
    if (db >= cap) return PadicNumber::from_parts(a.context_ptr(), va, a.unit(), static_cast<int>(cap));
    Integer raw = a.unit() * C.power(da) + b.unit() * C.power(db);
    raw = mod_reduce(raw, C.power(cap));
    if (raw == 0) return PadicNumber::zero(a.context_ptr());
    const long c = valuation(raw, C.prime());
    if (c >= cap) return PadicNumber::zero(a.context_ptr());
    Integer u;
    mpz_divexact(u.get_mpz_t(), raw.get_mpz_t(), C.power(c).get_mpz_t());
    return PadicNumber::from_parts(a.context_ptr(), v + c, std::move(u), static_cast<int>(cap - c));
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    require_same_context(a, b);
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return PadicNumber::from_parts(a.context_ptr(), a.valuation() + b.valuation(),
                                   a.unit() * b.unit(),
                                   std::min(a.known_digits(), b.known_digits()));
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    require_same_context(a, b);
    if (b.is_zero()) throw std::domain_error("p-adic division by zero");
    if (a.is_zero()) return a;
    const Integer& m = a.context().modulus();
    return PadicNumber::from_parts(a.context_ptr(), a.valuation() - b.valuation(),
                                   a.unit() * mod_inverse(b.unit(), m),
                                   std::min(a.known_digits(), b.known_digits()));
}

std::string PadicNumber::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << ctx_->prime() << "^" << val_ << " * (";
    Integer rem = mod_reduce(unit_, ctx_->power(known_));
    for (int k = 0; k < known_; ++k) {
        const Integer digit = rem % ctx_->prime();
        rem /= ctx_->prime();
        if (k == 0)
            os << digit.get_str();
        else if (digit != 0)
            os << " + " << digit.get_str() << "*" << ctx_->prime() << (k == 1 ? "" : "^" + std::to_string(k));
    }
    os << " + O(" << ctx_->prime() << "^" << known_ << "))";
    return os.str();
}

long valuation_or(const PadicNumber& x, long if_zero) {
    return x.is_zero() ? if_zero : x.valuation();
}

PadicNumber parse_padic(ContextPtr ctx, const std::string& text) {
    return PadicNumber::from_rational(std::move(ctx), parse_rational(text));
}

PadicNumber teichmuller(const PadicNumber& u) {
    if (u.is_zero() || u.valuation() != 0)
        throw std::domain_error("teichmuller lift needs a p-adic unit");
    const PadicContext& C = u.context();
    const Integer p(C.prime());
    Integer t = u.unit();
    for (int i = 0; i <= C.precision() + 2; ++i) {
        Integer next = mod_pow(t, p, C.modulus());
        if (next == t) break;
        t = std::move(next);
    }
    return PadicNumber::from_parts(u.context_ptr(), 0, std::move(t), u.known_digits());
}

PadicNumber iwasawa_log(const PadicNumber& x) {
    if (x.is_zero()) throw std::domain_error("log of zero");
    const PadicContext& C = x.context();
    const long p = C.prime();
    const int prec = C.precision();
    // Working precision: +2 digits absorb the per-term division by n (v_p(n) <=
    // log_p(n_max)); W bounds every n used since term valuations grow by >= 1.
    const long W = prec + 2 + ilog(p, prec + 8) + 1;
    const Integer PW = C.power(W);

    // Teichmuller part mod p^W of the lifted unit; exact for the lift, and
    // congruent to the true lift mod p^known.
    Integer om = x.unit();
    const Integer pp(p);
    for (long i = 0; i <= W + 2; ++i) {
        Integer next = mod_pow(om, pp, PW);
        if (next == om) break;
        om = std::move(next);
    }
    Integer w = mod_reduce(x.unit() * mod_inverse(om, PW), PW);
    Integer z = w - 1;
    if (z == 0) return PadicNumber::zero(x.context_ptr());

    const long vz = valuation(z, p);
    Integer acc(0);
    Integer pw = z;
    for (long n = 1;; ++n) {
        if (pw == 0) break;
        const long e = valuation(Integer(n), p);
        Integer term;
        mpz_divexact(term.get_mpz_t(), pw.get_mpz_t(), C.power(e).get_mpz_t());
        term = mod_reduce(term * mod_inverse(Integer(n) / C.power(e), PW), PW);
        if (n % 2 == 1)
            acc += term;
        else
            acc -= term;
        acc = mod_reduce(acc, PW);
        if ((n + 1) * vz >= W) break;
        pw = mod_reduce(pw * z, PW);
    }
    if (acc == 0) return PadicNumber::zero(x.context_ptr());
    const long vr = valuation(acc, p);
    if (vr >= prec + 2) return PadicNumber::zero(x.context_ptr());
    Integer u;
    mpz_divexact(u.get_mpz_t(), acc.get_mpz_t(), C.power(vr).get_mpz_t());
    const long known = std::min<long>(prec, std::min<long>(x.known_digits(), prec + 2) - vr);
    return PadicNumber::from_parts(x.context_ptr(), vr, std::move(u), static_cast<int>(known));
}

PadicNumber padic_exp(const PadicNumber& z) {
    if (z.is_zero()) return PadicNumber::one(z.context_ptr());
    const PadicContext& C = z.context();
    const long p = C.prime();
    const int prec = C.precision();
    const long vz = z.valuation();
    if (vz < 1) throw std::domain_error("exp outside the convergence disc (needs v_p >= 1)");
    const long W = prec + 2;
    const Integer PW = C.power(W);
    // Smallest n beyond which every term z^n/n! has valuation >= W:
    // n*vz - v_p(n!) >= n*(vz - 1/(p-1)) >= W.
    const long num = W * (p - 1);
    const long den = (p - 1) * vz - 1;  // > 0 for p >= 3, vz >= 1
    const long n_stop = num / den + 2;

    Integer acc(1);
    Integer ut(1);
    long vt = 0;
    const Integer& uz = z.unit();
    for (long n = 1; n <= n_stop; ++n) {
        const long e = valuation(Integer(n), p);
        vt += vz - e;
        ut = mod_reduce(ut * uz, PW);
        ut = mod_reduce(ut * mod_inverse(Integer(n) / C.power(e), PW), PW);
        if (vt < 0) throw std::logic_error("exp term valuation went negative");
        if (vt < W) acc = mod_reduce(acc + ut * C.power(vt), PW);
    }
    const long known = std::min<long>(prec, vz + z.known_digits());
    return PadicNumber::from_parts(z.context_ptr(), 0, std::move(acc), static_cast<int>(known));
}

PadicNumber q_pow(const PadicNumber& q, const Integer& e) {
    if (q.is_zero()) {
        if (e > 0) return q;
        if (e == 0) return PadicNumber::one(q.context_ptr());
        throw std::domain_error("zero to a negative power");
    }
    if (e == 0) return PadicNumber::one(q.context_ptr());
    if (!e.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    const long el = e.get_si();
    Integer u = mod_pow(q.unit(), e, q.context().modulus());  // negative e inverts the unit
    return PadicNumber::from_parts(q.context_ptr(), q.valuation() * el, std::move(u), q.known_digits());
}

PadicNumber q_pow(const PadicNumber& q, const Rational& x) {
    if (is_integer(x)) return q_pow(q, to_integer(x));
    if (q.is_zero() || q.valuation() != 0 || mod_reduce(q.unit() - 1, Integer(q.context().prime())) != 0)
        throw std::domain_error("q^x for non-integer x needs q = 1 (mod p)");
    const PadicNumber xl = PadicNumber::from_rational(q.context_ptr(), x) * iwasawa_log(q);
    if (!xl.is_zero() && xl.valuation() < 1)
        throw std::domain_error("q^x outside the exp convergence disc: v_p(x log q) < 1");
    return padic_exp(xl);
}

}  // namespace qgamma
