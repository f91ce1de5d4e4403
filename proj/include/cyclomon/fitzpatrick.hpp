#pragma once

// Exact evaluation of the Fitzpatrick function of order n on finite graphs:
// F(x, x*) = max over chains (i_1..i_{n-1}) of
//   sum_{t<=n-2} W[i_t][i_{t+1}] + <s*_{i_{n-1}}, x> - <s*_{i_{n-1}}, s_{i_{n-1}}>
//   + <x*, s_{i_1}>,
// together with the extension-candidate test and graph translation.

#include "cyclomon/core.hpp"
#include "cyclomon/monotonicity.hpp"

namespace cyclomon {

struct FitzEvaluation {
    double value = 0.0;
    std::vector<int> argmax_chain;  // n-1 graph indices, 0-based
    Vector slope_x;                 // s*_{i_{n-1}}: subgradient in x
    Vector slope_xstar;             // s_{i_1}: subgradient in x*
};

enum class FitzMethod { Naive, Dp };

FitzEvaluation eval_fitz(const OperatorGraph& graph, int n, const Vector& x,
                         const Vector& x_star, FitzMethod method = FitzMethod::Dp,
                         long long budget = kDefaultWalkBudget);

/// Candidate acceptance per F(x, x*) <= <x*, x> + feas_tol. Appends a
/// precondition warning when the graph itself is not n-monotone (the
/// equivalence with enlarged-graph monotonicity presumes it is).
bool candidate_test(const OperatorGraph& graph, int n, const Vector& x, const Vector& x_star,
                    const Tolerances& tols = {}, std::vector<std::string>* warnings = nullptr);

/// Applies S'(x) = -w* + S(x): returns {(s, s* - w*)}.
OperatorGraph translate(const OperatorGraph& graph, const Vector& w_star);

}  // namespace cyclomon
