#pragma once

#include "qgamma/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qgamma {

struct CaseRecord {
    std::string key;  // stable identifier, also the sort/report order
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
    std::string residual;
    bool pass = false;
    std::string note;  // evaluation transcript: backend, terms, predicates, tolerances
};

struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CaseRecord> cases;
    std::string chosen_variant;  // "", "paper" or "derived" for the series suites

    int total() const { return static_cast<int>(cases.size()); }
    int passed() const;
    bool all_passed() const { return passed() == total(); }
};

// Shortest round-trippable decimal (printf %.17g semantics pinned for determinism).
std::string format_double(double x);

// Exact "a/b" when compact; decimal approximation marked with "~" otherwise.
std::string render_rational(const Rational& x, size_t max_chars = 96);

std::string summary_line(const SuiteReport& r);

// Deterministic writers: fixed key order, no locale dependence.
void emit_json(const SuiteReport& r, std::ostream& os);
void emit_csv(const SuiteReport& r, std::ostream& os);
void emit(const SuiteReport& r, const std::string& format, std::ostream& os);  // "json" | "csv"

}  // namespace qgamma
