#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgamma/report.hpp"
#include "qgamma/suites.hpp"

#include "json.hpp"

#include <sstream>

using namespace qgamma;

namespace {
SuiteReport tiny_report() {
    SuiteReport r;
    r.suite = "demo";
    r.parameters = {{"grid", "unit"}};
    CaseRecord a;
    a.key = "demo/one";
    a.inputs = {{"x", "1"}, {"note, with comma", "v"}};
    a.lhs = "1";
    a.rhs = "1";
    a.residual = "0";
    a.pass = true;
    a.note = "plain";
    CaseRecord b;
    b.key = "demo/two";
    b.inputs = {{"y", "2"}};
    b.lhs = "a\"b";
    b.rhs = "c\\d";
    b.residual = "1";
    b.pass = false;
    b.note = "line one\nline two";
    r.cases = {a, b};
    return r;
}
}  // namespace

TEST_CASE("counts and summary") {
    const SuiteReport r = tiny_report();
    CHECK(r.total() == 2);
    CHECK(r.passed() == 1);
    CHECK_FALSE(r.all_passed());
    CHECK(summary_line(r).find("1/2") != std::string::npos);
}

TEST_CASE("double formatting survives a round trip") {
    for (const double x : {0.5, 1.0 / 3.0, -2.5e300, 1e-30, 0.0}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("rational rendering") {
    CHECK(render_rational(rat(3, 4)) == "3/4");
    CHECK(render_rational(Rational(0)) == "0");
    // rationals too long to print exactly fall back to a marked decimal
    Rational huge = rat_pow(rat(7, 3), 200);
    CHECK(render_rational(huge).front() == '~');
}

TEST_CASE("json escaping and shape") {
    const SuiteReport r = tiny_report();
    std::ostringstream os;
    emit_json(r, os);
    const std::string s = os.str();
    CHECK(s.find("\"suite\":\"demo\"") != std::string::npos);
    CHECK(s.find("a\\\"b") != std::string::npos);
    CHECK(s.find("c\\\\d") != std::string::npos);
    CHECK(s.find("line one\\nline two") != std::string::npos);
    CHECK(s.find("\"all_passed\":false") != std::string::npos);
}

TEST_CASE("json parses and matches the shipped schema contract") {
    const SuiteReport r = tiny_report();
    std::ostringstream os;
    emit_json(r, os);
    const nlohmann::json j = nlohmann::json::parse(os.str());
    // required top-level fields and types, per docs/report_schema.json
    REQUIRE(j.is_object());
    CHECK(j.at("suite").is_string());
    CHECK(j.at("parameters").is_object());
    REQUIRE(j.at("cases").is_array());
    for (const auto& c : j.at("cases")) {
        for (const char* field : {"key", "lhs", "rhs", "residual", "note"})
            CHECK(c.at(field).is_string());
        CHECK(c.at("inputs").is_object());
        CHECK(c.at("pass").is_boolean());
    }
    const auto& summary = j.at("summary");
    CHECK(summary.at("total").get<int>() == 2);
    CHECK(summary.at("passed").get<int>() == 1);
    CHECK(summary.at("all_passed").get<bool>() == false);
    CHECK(summary.at("chosen_variant").is_string());
    // escaped content round-trips back to the original strings
    CHECK(j.at("cases")[1].at("lhs").get<std::string>() == "a\"b");
    CHECK(j.at("cases")[1].at("rhs").get<std::string>() == "c\\d");
    CHECK(j.at("cases")[1].at("note").get<std::string>() == "line one\nline two");
}

TEST_CASE("csv quoting and shape") {
    const SuiteReport r = tiny_report();
    std::ostringstream os;
    emit_csv(r, os);
    const std::string s = os.str();
    CHECK(s.rfind("suite,key,inputs,lhs,rhs,residual,pass,note", 0) == 0);
    CHECK(s.find("demo/one") != std::string::npos);
    // the comma-bearing input key must be quoted
    CHECK(s.find("\"") != std::string::npos);
}

TEST_CASE("unknown format is rejected") {
    const SuiteReport r = tiny_report();
    std::ostringstream os;
    CHECK_THROWS_AS(emit(r, "xml", os), std::invalid_argument);
}

TEST_CASE("suite runs are deterministic") {
    SuiteParams P;
    P.q_real = rat(1, 2);
    P.alpha = 1;
    const SuiteReport r1 = run_suite(SuiteName::Prop1, P);
    const SuiteReport r2 = run_suite(SuiteName::Prop1, P);
    std::ostringstream j1, j2, c1, c2;
    emit_json(r1, j1);
    emit_json(r2, j2);
    emit_csv(r1, c1);
    emit_csv(r2, c2);
    CHECK(j1.str() == j2.str());
    CHECK(c1.str() == c2.str());
    CHECK(r1.all_passed());
}

TEST_CASE("unknown suite name is rejected") {
    CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
    CHECK(to_string(parse_suite("thm2")) == "thm2");
}
