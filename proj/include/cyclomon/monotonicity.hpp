#pragma once

// n-cyclic and cyclic monotonicity of finite graphs, violation certificates,
// and convex potentials whose subdifferential contains the graph.

#include "cyclomon/core.hpp"

namespace cyclomon {

struct MonotonicityReport {
    int n = 2;  // 0 stands for "cyclic" (all n)
    bool is_monotone = false;
    std::vector<int> worst_cycle;  // walk i_1..i_k, 0-based graph indices
    double worst_sum = 0.0;
    std::string method;
};

enum class MonotonicityMethod { Bruteforce, MaxPlus };

constexpr long long kDefaultWalkBudget = 1'000'000;

/// Maximizes the cyclic sum over all walks of length n; monotone within
/// tolerance means worst_sum <= feas_tol.
MonotonicityReport is_n_monotone(const OperatorGraph& graph, int n,
                                 MonotonicityMethod method = MonotonicityMethod::MaxPlus,
                                 const Tolerances& tols = {},
                                 long long budget = kDefaultWalkBudget);

/// True iff the weight digraph has no positive-weight cycle (Bellman-Ford
/// longest-path relaxation with cycle extraction).
MonotonicityReport is_cyclically_monotone(const OperatorGraph& graph,
                                          const Tolerances& tols = {});

struct MaxAffinePiece {
    Vector slope;
    double intercept = 0.0;
};

struct MaxAffineFunction {
    std::vector<MaxAffinePiece> pieces;

    double value(const Vector& x) const;
    /// Lowest index among the pieces attaining the max at x.
    int active_piece(const Vector& x) const;
};

struct NotCyclicallyMonotone : std::runtime_error {
    std::vector<int> cycle;
    double cycle_sum = 0.0;
    NotCyclicallyMonotone(std::vector<int> c, double s)
        : std::runtime_error("graph is not cyclically monotone (positive cycle of sum " +
                             std::to_string(s) + ")"),
          cycle(std::move(c)),
          cycle_sum(s) {}
};

/// Antiderivative f(x) = max_j { pi_j + <s*_j, x - s_j> } built from
/// longest-path potentials pi from base_index; each s*_j is a subgradient
/// of f at s_j. Throws NotCyclicallyMonotone otherwise.
MaxAffineFunction rockafellar_potential(const OperatorGraph& graph, int base_index = 0,
                                        const Tolerances& tols = {});

/// Checks f(y) >= f(s_j) + <s*_j, y - s_j> - feas_tol for all graph indices j
/// and sample points y.
bool verify_potential(const OperatorGraph& graph, const MaxAffineFunction& f,
                      const std::vector<Vector>& samples, const Tolerances& tols = {});

}  // namespace cyclomon
