#pragma once

#include <functional>
#include <optional>
#include <string>

namespace qgamma {

// Evaluation strategies for sum_{k>=0} (-1)^k a_k in the Abel sense.
//   LimitSplit:     a_k = L + b_k with b_k -> 0; value = L/2 + sum (-1)^k b_k.
//   EulerTransform: forward-difference acceleration on a head of the sequence;
//                   the only engine that handles unbounded, slowly varying a_k.
//   Cesaro:         mean of adjacent partial sums; needs a_k convergent.
//   Direct:         plain partial sums; needs a_k -> 0.
enum class SumMethod { LimitSplit, EulerTransform, Cesaro, Direct };

SumMethod parse_sum_method(const std::string& name);  // "limit-split" | "euler" | "cesaro" | "direct"
std::string to_string(SumMethod m);

struct AlternatingSeries {
    std::function<double(long)> term;   // a_k, k >= 0
    std::optional<double> limit;        // lim a_k when known analytically
};

struct SummationOutcome {
    double value = 0.0;
    SumMethod method = SumMethod::LimitSplit;
    long terms_used = 0;
    double error_estimate = 0.0;
    bool converged = false;
};

SummationOutcome sum_alternating(const AlternatingSeries& series, SumMethod method,
                                 double tol, long max_terms = 200000);

// Aitken-extrapolated limit of a_k; returns nullopt when no stable limit emerges.
std::optional<double> estimate_limit(const std::function<double(long)>& a, double tol,
                                     long max_terms, double* error_out = nullptr);

}  // namespace qgamma
