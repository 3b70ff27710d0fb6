#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgamma/rational.hpp"

using namespace qgamma;

TEST_CASE("rat canonicalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(rat(0, 7) == 0);
    CHECK(rat(Integer(10), Integer(15)) == rat(2, 3));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("integer and rational powers") {
    CHECK(int_pow(3, 4) == 81);
    CHECK(int_pow(Integer(-2), 5) == -32);
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(-5), 0) == 1);
    CHECK(rat_pow(Rational(0), 5) == 0);
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("binomial coefficients, row 5") {
    const long row[] = {1, 5, 10, 10, 5, 1};
    for (unsigned long k = 0; k <= 5; ++k) CHECK(binomial(5, k) == row[k]);
    CHECK(binomial(3, 7) == 0);
}

TEST_CASE("p-adic valuation of rationals") {
    CHECK(valuation(Integer(250), 5) == 3);
    CHECK(valuation(rat(250, 7), 5) == 3);
    CHECK(valuation(rat(7, 25), 5) == -2);
    CHECK(valuation(rat(-18), 3) == 2);
    CHECK_THROWS_AS(valuation(Rational(0), 5), std::domain_error);
    CHECK(unit_part(rat(250, 7), 5) == rat(2, 7));
    CHECK(unit_part(rat(7, 25), 5) == 7);
}

TEST_CASE("integer conversions") {
    CHECK(is_integer(rat(8, 4)));
    CHECK_FALSE(is_integer(rat(1, 2)));
    CHECK(to_integer(rat(8, 4)) == 2);
    CHECK_THROWS_AS(to_integer(rat(1, 2)), std::domain_error);
}

TEST_CASE("parsing") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-12") == -12);
    CHECK(parse_rational("4/6") == rat(2, 3));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("seven"), std::invalid_argument);
}
