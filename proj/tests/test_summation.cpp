#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgamma/summation.hpp"

#include <cmath>

using namespace qgamma;

namespace {
const AlternatingSeries grandi{[](long) { return 1.0; }, 1.0};
const AlternatingSeries geometric{[](long k) { return std::pow(0.5, static_cast<double>(k)); },
                                  0.0};
}  // namespace

TEST_CASE("method names round-trip") {
    for (const char* name : {"limit-split", "euler", "cesaro", "direct"})
        CHECK(to_string(parse_sum_method(name)) == name);
    CHECK_THROWS_AS(parse_sum_method("abel"), std::invalid_argument);
}

TEST_CASE("Grandi series sums to exactly 1/2") {
    for (const SumMethod m : {SumMethod::LimitSplit, SumMethod::EulerTransform,
                              SumMethod::Cesaro}) {
        const SummationOutcome o = sum_alternating(grandi, m, 1e-12);
        CHECK(o.converged);
        CHECK(std::fabs(o.value - 0.5) <= 1e-15);
    }
}

TEST_CASE("geometric series 1/(1+1/2) = 2/3 under every method") {
    for (const SumMethod m : {SumMethod::LimitSplit, SumMethod::EulerTransform, SumMethod::Cesaro,
                              SumMethod::Direct}) {
        const SummationOutcome o = sum_alternating(geometric, m, 1e-10);
        CHECK(o.converged);
        CHECK(std::fabs(o.value - 2.0 / 3.0) < 1e-9);
    }
}

TEST_CASE("limit-split handles a shifted tail") {
    // sum (-1)^k (3 + 4^-k) = 3/2 + 1/(1+1/4) = 2.3 in the Abel sense
    const AlternatingSeries s{[](long k) { return 3.0 + std::pow(0.25, static_cast<double>(k)); },
                              3.0};
    const SummationOutcome o = sum_alternating(s, SumMethod::LimitSplit, 1e-12);
    CHECK(o.converged);
    CHECK(std::fabs(o.value - 2.3) <= 1e-12);
}

TEST_CASE("limit-split discovers the limit when not supplied") {
    const AlternatingSeries s{[](long k) { return 3.0 + std::pow(0.25, static_cast<double>(k)); },
                              std::nullopt};
    const SummationOutcome o = sum_alternating(s, SumMethod::LimitSplit, 1e-10);
    CHECK(o.converged);
    CHECK(std::fabs(o.value - 2.3) < 1e-9);
}

TEST_CASE("limit-split refuses unbounded sequences") {
    const AlternatingSeries s{[](long k) { return static_cast<double>(k); }, std::nullopt};
    const SummationOutcome o = sum_alternating(s, SumMethod::LimitSplit, 1e-10, 4096);
    CHECK_FALSE(o.converged);
}

TEST_CASE("Euler transform accelerates log 2") {
    const AlternatingSeries s{[](long k) { return 1.0 / static_cast<double>(k + 1); }, 0.0};
    const SummationOutcome o = sum_alternating(s, SumMethod::EulerTransform, 1e-10);
    CHECK(o.converged);
    CHECK(std::fabs(o.value - std::log(2.0)) < 1e-9);
}

TEST_CASE("Euler transform handles unbounded slowly varying terms") {
    // sum (-1)^k log(k+2) = eta'(0)-ish value; cross-check against limit-split
    // on the centered tail log(k+2) - L with the Aitken limit disabled: instead
    // compare the two admissible engines against each other.
    const AlternatingSeries s{[](long k) { return std::log(static_cast<double>(k + 2)); },
                              std::nullopt};
    const SummationOutcome euler = sum_alternating(s, SumMethod::EulerTransform, 1e-10);
    CHECK(euler.converged);
    // eta'(0) form: sum (-1)^k log(k+2) in the Abel sense equals
    // (1/2)log(pi/2) - log(2)/1 ... pinned numerically instead: the value must
    // reproduce the known Abel sum 0.2257913526447274 of log(2)/2 - eta'(0) form.
    CHECK(std::fabs(euler.value - 0.22579135264472743) < 1e-8);
}

TEST_CASE("estimate_limit finds geometric limits") {
    double err = 0.0;
    const auto lim = estimate_limit(
        [](long k) { return 5.0 + 3.0 * std::pow(0.5, static_cast<double>(k)); }, 1e-12, 4096,
        &err);
    REQUIRE(lim.has_value());
    CHECK(std::fabs(*lim - 5.0) < 1e-10);

    const auto none = estimate_limit([](long k) { return static_cast<double>(k * k); }, 1e-12,
                                     1024, nullptr);
    CHECK_FALSE(none.has_value());
}
