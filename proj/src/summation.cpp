#include "qgamma/summation.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qgamma {

SumMethod parse_sum_method(const std::string& name) {
    if (name == "limit-split") return SumMethod::LimitSplit;
    if (name == "euler") return SumMethod::EulerTransform;
    if (name == "cesaro") return SumMethod::Cesaro;
    if (name == "direct") return SumMethod::Direct;
    throw std::invalid_argument("unknown summation method: '" + name + "'");
}

std::string to_string(SumMethod m) {
    switch (m) {
        case SumMethod::LimitSplit: return "limit-split";
        case SumMethod::EulerTransform: return "euler";
        case SumMethod::Cesaro: return "cesaro";
        case SumMethod::Direct: return "direct";
    }
    return "?";
}

std::optional<double> estimate_limit(const std::function<double(long)>& a, double tol,
                                     long max_terms, double* error_out) {
    std::optional<double> prev;
    for (long k0 = 8; k0 + 2 < max_terms; k0 *= 2) {
        const double a0 = a(k0), a1 = a(k0 + 1), a2 = a(k0 + 2);
        const double d1 = a1 - a0, d2 = a2 - a1;
        const double scale = std::max({std::fabs(a0), std::fabs(a1), std::fabs(a2), 1.0});
        if (std::fabs(d1) <= 1e-15 * scale && std::fabs(d2) <= 1e-15 * scale) {
            if (error_out) *error_out = std::fabs(d1);
            return a2;
        }
        if (d1 == 0.0) continue;
        const double r = d2 / d1;
        if (std::fabs(r) >= 0.999) {
            prev.reset();  // not settling geometrically yet
            continue;
        }
        const double est = a2 + d2 * r / (1.0 - r);
        if (prev && std::fabs(est - *prev) <= std::max(tol * 1e-2, 1e-15 * scale)) {
            if (error_out) *error_out = std::fabs(est - *prev);
            return est;
        }
        prev = est;
    }
    return std::nullopt;
}

namespace {

SummationOutcome sum_limit_split(const AlternatingSeries& s, double tol, long max_terms) {
    SummationOutcome out;
    out.method = SumMethod::LimitSplit;
    double limit_err = 0.0;
    std::optional<double> L = s.limit;
    if (!L) L = estimate_limit(s.term, tol, max_terms, &limit_err);
    if (!L) {
        out.error_estimate = std::numeric_limits<double>::infinity();
        return out;  // precondition failed: no finite term limit
    }
    double acc = 0.0;
    double sign = 1.0;
    int small_run = 0;
    double recent = 0.0;
    double prev1 = 0.0, prev2 = 0.0;
    long k = 0;
    for (; k < max_terms; ++k) {
        const double b = s.term(k) - *L;
        acc += sign * b;
        sign = -sign;
        // window max over the last three |b|: matches the three-small-terms stop
        // rule and stays a valid alternating-tail bound for fast-decaying terms
        recent = std::max({std::fabs(b), prev1, prev2});
        prev2 = prev1;
        prev1 = std::fabs(b);
        if (std::fabs(b) <= tol * 1e-2) {
            if (++small_run >= 3 && k >= 8) {
                ++k;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    out.value = *L / 2.0 + acc;
    out.terms_used = k;
    out.error_estimate = 10.0 * recent + limit_err;
    out.converged = small_run >= 3 && out.error_estimate <= std::max(tol, 1e-12);
    if (!out.converged && small_run >= 3) out.converged = out.error_estimate <= tol * 10;
    return out;
}

SummationOutcome sum_euler(const AlternatingSeries& s, double tol, long max_terms) {
    SummationOutcome out;
    out.method = SumMethod::EulerTransform;
    const long H = std::min<long>(32, std::max<long>(8, max_terms));
    double L = 0.0;
    if (s.limit) L = *s.limit;
    std::vector<double> row;
    row.reserve(static_cast<size_t>(H));
    double maxabs = 0.0;
    for (long k = 0; k < H; ++k) {
        row.push_back(s.term(k) - L);
        maxabs = std::max(maxabs, std::fabs(row.back()));
    }
    double acc = 0.0;
    double best_acc = 0.0, best_term = std::numeric_limits<double>::infinity();
    double prev_term = std::numeric_limits<double>::infinity();
    long used = 0;
    double pow2 = 2.0;
    double sign = 1.0;
    bool truncated_at_min = false;
    int growing = 0;
    for (long j = 0; j < H; ++j) {
        const double term = sign * row[0] / pow2;
        // one rogue increase is normal when geometric modes of opposite sign
        // cross; an asymptotic minimum announces itself by sustained growth
        growing = (std::fabs(term) > std::fabs(prev_term)) ? growing + 1 : 0;
        if (j >= 4 && growing >= 2) {
            truncated_at_min = true;
            break;
        }
        acc += term;
        used = j + 1;
        if (std::fabs(term) < best_term) {
            best_term = std::fabs(term);
            best_acc = acc;
        }
        prev_term = term;
        if (std::fabs(term) <= tol * 1e-3 && j >= 2) break;
        sign = -sign;
        pow2 *= 2.0;
        for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
        if (row.empty()) break;
    }
    const double noise = static_cast<double>(H) * 1.1e-16 * maxabs;
    out.value = L / 2.0 + (truncated_at_min ? best_acc : acc);
    out.terms_used = H + used;
    out.error_estimate = 2.0 * best_term + noise;
    out.converged = out.error_estimate <= std::max(tol, 4.0 * noise);
    return out;
}

SummationOutcome sum_cesaro(const AlternatingSeries& s, double tol, long max_terms) {
    SummationOutcome out;
    out.method = SumMethod::Cesaro;
    double S = 0.0;
    double sign = 1.0;
    std::optional<double> prevA;
    int stable = 0;
    double lastA = 0.0, lastd = std::numeric_limits<double>::infinity();
    long k = 0;
    for (; k < max_terms; ++k) {
        const double Sprev = S;
        S += sign * s.term(k);
        sign = -sign;
        const double A = 0.5 * (Sprev + S);
        if (k > 0 && prevA) {
            lastd = std::fabs(A - *prevA);
            if (lastd <= tol * 0.25) {
                if (++stable >= 2 && k >= 8) {
                    lastA = A;
                    ++k;
                    break;
                }
            } else {
                stable = 0;
            }
        }
        prevA = A;
        lastA = A;
    }
    out.value = lastA;
    out.terms_used = k;
    out.error_estimate = 4.0 * lastd;
    out.converged = stable >= 2;
    return out;
}

SummationOutcome sum_direct(const AlternatingSeries& s, double tol, long max_terms) {
    SummationOutcome out;
    out.method = SumMethod::Direct;
    double S = 0.0;
    double sign = 1.0;
    double last = std::numeric_limits<double>::infinity();
    long k = 0;
    for (; k < max_terms; ++k) {
        const double a = s.term(k);
        S += sign * a;
        sign = -sign;
        last = std::fabs(a);
        if (last <= tol * 0.25 && k >= 4) {
            ++k;
            break;
        }
    }
    out.value = S;
    out.terms_used = k;
    out.error_estimate = last;  // alternating-series bound once terms decrease
    out.converged = last <= tol * 0.25;
    return out;
}

long term_cap_from_env(long max_terms) {
    if (const char* cap = std::getenv("QGAMMA_MAX_TERMS")) {
        const long c = std::strtol(cap, nullptr, 10);
        if (c > 0) return std::min(max_terms, c);
    }
    return max_terms;
}

}  // namespace

SummationOutcome sum_alternating(const AlternatingSeries& series, SumMethod method,
                                 double tol, long max_terms) {
    if (!series.term) throw std::invalid_argument("alternating series without a term function");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    max_terms = term_cap_from_env(max_terms);
    switch (method) {
        case SumMethod::LimitSplit: return sum_limit_split(series, tol, max_terms);
        case SumMethod::EulerTransform: return sum_euler(series, tol, max_terms);
        case SumMethod::Cesaro: return sum_cesaro(series, tol, max_terms);
        case SumMethod::Direct: return sum_direct(series, tol, max_terms);
    }
    throw std::logic_error("unreachable summation method");
}

}  // namespace qgamma
