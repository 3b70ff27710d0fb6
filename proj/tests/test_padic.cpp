#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgamma/padic.hpp"

using namespace qgamma;

namespace {
const ContextPtr ctx = make_context(5, 8);

Integer mod(const Integer& a, long m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}
}  // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(make_context(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_context(2, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_context(5, 0), std::invalid_argument);
    CHECK(make_context(3, 6)->modulus() == 729);
}

TEST_CASE("normalization in from_parts") {
    const PadicNumber x = PadicNumber::from_parts(ctx, 0, Integer(50), 8);
    CHECK(x.valuation() == 2);
    CHECK(x.unit() == 2);
    CHECK(x.known_digits() == 6);  // two digits were spent on the carried factor 25
    CHECK(PadicNumber::from_parts(ctx, 3, Integer(0), 8).is_zero());
}

TEST_CASE("rational embedding") {
    const PadicNumber x = PadicNumber::from_rational(ctx, rat(9, 5));
    CHECK(x.valuation() == -1);
    CHECK(x.unit() == 9);
    CHECK(x.known_digits() == 8);
    CHECK(x.lift() == rat(9, 5));

    // 1/2 = 313 mod 625
    const PadicNumber h = PadicNumber::from_rational(ctx, rat(1, 2));
    CHECK(mod(h.unit(), 625) == 313);
    CHECK(parse_padic(ctx, "9/5").lift() == rat(9, 5));
}

TEST_CASE("addition tracks known digits") {
    const PadicNumber a = PadicNumber::from_integer(ctx, Integer(1));
    const PadicNumber b = PadicNumber::from_integer(ctx, Integer(24));
    const PadicNumber s = a + b;  // 25
    CHECK(s.valuation() == 2);
    CHECK(s.unit() == 1);
    CHECK(s.known_digits() == 6);  // value known mod 5^8, so 6 unit digits remain

    // cancellation below the tracked window collapses to zero
    const PadicNumber c = PadicNumber::from_parts(ctx, 0, Integer(1), 2);
    const PadicNumber d = PadicNumber::from_parts(ctx, 0, Integer(-1), 4);
    CHECK((c + d).is_zero());

    // known digits cap at the least precise operand
    const PadicNumber e = PadicNumber::from_parts(ctx, 0, Integer(1), 2) +
                          PadicNumber::from_parts(ctx, 0, Integer(1), 8);
    CHECK(e.known_digits() == 2);
    CHECK(e.unit() == 2);
}

TEST_CASE("multiplication and division") {
    const PadicNumber a = PadicNumber::from_parts(ctx, 1, Integer(2), 8);
    const PadicNumber b = PadicNumber::from_parts(ctx, 2, Integer(3), 8);
    const PadicNumber p = a * b;
    CHECK(p.valuation() == 3);
    CHECK(p.unit() == 6);

    const PadicNumber inv = PadicNumber::one(ctx) / PadicNumber::from_integer(ctx, Integer(5));
    CHECK(inv.valuation() == -1);
    CHECK(inv.unit() == 1);
    CHECK_THROWS_AS(a / PadicNumber::zero(ctx), std::domain_error);

    const PadicNumber roundtrip = (a / b) * b - a;
    CHECK(roundtrip.is_zero());
}

TEST_CASE("str renders digits") {
    const std::string s = PadicNumber::from_rational(ctx, rat(9, 5)).str();
    CHECK(s.find("5^-1") != std::string::npos);
    CHECK(s.find("O(") != std::string::npos);
    CHECK(PadicNumber::zero(ctx).str() == "0");
}

TEST_CASE("teichmuller character") {
    const PadicNumber t = teichmuller(PadicNumber::from_integer(ctx, Integer(2)));
    CHECK(mod(t.unit(), 25) == 7);  // the 4th root of unity over 2 is 7 mod 25
    const PadicNumber t4 = q_pow(t, Integer(4));
    CHECK((t4 - PadicNumber::one(ctx)).is_zero());
    CHECK_THROWS_AS(teichmuller(PadicNumber::from_integer(ctx, Integer(5))),
                    std::domain_error);
}

TEST_CASE("iwasawa log") {
    // log(1+5) = 5 - 25/2 + ... == 5 (mod 25)
    const PadicNumber l6 = iwasawa_log(PadicNumber::from_integer(ctx, Integer(6)));
    CHECK(l6.valuation() == 1);
    CHECK(valuation_or(l6 - PadicNumber::from_integer(ctx, Integer(5)), 99) >= 2);

    // branch normalization and kernel
    CHECK(iwasawa_log(PadicNumber::from_integer(ctx, Integer(5))).is_zero());
    CHECK(iwasawa_log(PadicNumber::one(ctx)).is_zero());
    CHECK(iwasawa_log(teichmuller(PadicNumber::from_integer(ctx, Integer(3)))).is_zero());

    // multiplicativity: log(66) = log(6) + log(11)
    const PadicNumber lhs = iwasawa_log(PadicNumber::from_integer(ctx, Integer(66)));
    const PadicNumber rhs = l6 + iwasawa_log(PadicNumber::from_integer(ctx, Integer(11)));
    CHECK(valuation_or(lhs - rhs, 99) >= 6);

    CHECK_THROWS_AS(iwasawa_log(PadicNumber::zero(ctx)), std::domain_error);
}

TEST_CASE("exp inverts log on 1 + 5Z_5") {
    const PadicNumber six = PadicNumber::from_integer(ctx, Integer(6));
    const PadicNumber back = padic_exp(iwasawa_log(six));
    CHECK(valuation_or(back - six, 99) >= 6);
    CHECK(padic_exp(PadicNumber::zero(ctx)).lift() == 1);
    CHECK_THROWS_AS(padic_exp(PadicNumber::one(ctx)), std::domain_error);
}

TEST_CASE("q_pow with integer exponents") {
    const PadicNumber q = PadicNumber::from_integer(ctx, Integer(7));
    CHECK(q_pow(q, Integer(3)).lift() == 343);
    const PadicNumber neg = q_pow(q, Integer(-2));
    CHECK((neg * q_pow(q, Integer(2)) - PadicNumber::one(ctx)).is_zero());
    // rational-exponent overload falls back to the exact path on integers
    CHECK((q_pow(q, Rational(3)) - q_pow(q, Integer(3))).is_zero());
}

TEST_CASE("q_pow with fractional exponent") {
    // q = 1 + 25: q^{1/5} == 1 + 5 (mod 25), and its 5th power returns q
    const PadicNumber q = PadicNumber::from_integer(ctx, Integer(26));
    const PadicNumber r = q_pow(q, rat(1, 5));
    CHECK(r.valuation() == 0);
    CHECK(mod(r.unit(), 25) == 6);
    CHECK(valuation_or(q_pow(r, Integer(5)) - q, 99) >= 6);

    // preconditions: unit congruent to 1 mod p and v_p(x log q) >= 1
    CHECK_THROWS_AS(q_pow(PadicNumber::from_integer(ctx, Integer(2)), rat(1, 5)),
                    std::domain_error);
    CHECK_THROWS_AS(q_pow(PadicNumber::from_integer(ctx, Integer(6)), rat(1, 5)),
                    std::domain_error);
}
