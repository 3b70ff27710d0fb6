#include "qgamma/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qgamma {

int SuiteReport::passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string render_rational(const Rational& x, size_t max_chars) {
    std::string s = x.get_str();
    if (s.size() <= max_chars) return s;
    return "~" + format_double(x.get_d());
}

std::string summary_line(const SuiteReport& r) {
    return "suite " + r.suite + ": " + std::to_string(r.passed()) + "/" +
           std::to_string(r.total()) + " cases passed" +
           (r.chosen_variant.empty() ? "" : " (variant: " + r.chosen_variant + ")");
}

namespace {

void json_escape(const std::string& s, std::ostream& os) {
    os << '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    os << buf;
                } else {
                    os << ch;
                }
        }
    }
    os << '"';
}

void json_pairs(const std::vector<std::pair<std::string, std::string>>& kv, std::ostream& os) {
    os << '{';
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ',';
        first = false;
        json_escape(k, os);
        os << ':';
        json_escape(v, os);
    }
    os << '}';
}

// One CSV field; quotes applied whenever separators or quotes occur.
void csv_field(const std::string& s, std::ostream& os) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        os << s;
        return;
    }
    os << '"';
    for (const char ch : s) {
        if (ch == '"') os << '"';
        os << ch;
    }
    os << '"';
}

}  // namespace

void emit_json(const SuiteReport& r, std::ostream& os) {
    os << "{\"suite\":";
    json_escape(r.suite, os);
    os << ",\"parameters\":";
    json_pairs(r.parameters, os);
    os << ",\"cases\":[";
    bool first = true;
    for (const auto& c : r.cases) {
        if (!first) os << ',';
        first = false;
        os << "{\"key\":";
        json_escape(c.key, os);
        os << ",\"inputs\":";
        json_pairs(c.inputs, os);
        os << ",\"lhs\":";
        json_escape(c.lhs, os);
        os << ",\"rhs\":";
        json_escape(c.rhs, os);
        os << ",\"residual\":";
        json_escape(c.residual, os);
        os << ",\"pass\":" << (c.pass ? "true" : "false");
        os << ",\"note\":";
        json_escape(c.note, os);
        os << '}';
    }
    os << "],\"summary\":{\"total\":" << r.total() << ",\"passed\":" << r.passed()
       << ",\"all_passed\":" << (r.all_passed() ? "true" : "false") << ",\"chosen_variant\":";
    json_escape(r.chosen_variant, os);
    os << "}}\n";
}

void emit_csv(const SuiteReport& r, std::ostream& os) {
    os << "suite,key,inputs,lhs,rhs,residual,pass,note\n";
    for (const auto& c : r.cases) {
        csv_field(r.suite, os);
        os << ',';
        csv_field(c.key, os);
        os << ',';
        std::string inputs;
        for (const auto& [k, v] : c.inputs) {
            if (!inputs.empty()) inputs += ';';
            inputs += k + "=" + v;
        }
        csv_field(inputs, os);
        os << ',';
        csv_field(c.lhs, os);
        os << ',';
        csv_field(c.rhs, os);
        os << ',';
        csv_field(c.residual, os);
        os << ',';
        os << (c.pass ? "true" : "false");
        os << ',';
        csv_field(c.note, os);
        os << '\n';
    }
}

void emit(const SuiteReport& r, const std::string& format, std::ostream& os) {
    if (format == "json")
        emit_json(r, os);
    else if (format == "csv")
        emit_csv(r, os);
    else
        throw std::invalid_argument("unknown report format: '" + format + "'");
}

}  // namespace qgamma
