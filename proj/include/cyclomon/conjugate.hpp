#pragma once

// Fenchel conjugation of the order-n Fitzpatrick function via linear
// programming over its affine pieces, the pairing-dominance falsifier,
// domain-sandwich checks, f* = (q_B + delta_C)* evaluation, and the
// duality-gap audit.

#include <cstdint>

#include "cyclomon/core.hpp"
#include "cyclomon/fitzpatrick.hpp"

namespace cyclomon {

struct AffinePiece {
    Vector slope_x;      // s*_{i_{n-1}}
    Vector slope_xstar;  // s_{i_1}
    double intercept = 0.0;
    std::vector<int> chain;
};

struct AffinePieceSet {
    int n = 2;
    int dimension = 0;
    std::vector<AffinePiece> pieces;

    double value(const Vector& x, const Vector& x_star) const;
};

AffinePieceSet enumerate_pieces(const OperatorGraph& graph, int n,
                                long long budget = kDefaultWalkBudget);

struct ConjugateValue {
    bool finite = false;
    double value = 0.0;       // +infinity is encoded by finite == false
    Vector certificate;       // simplex weights over pieces when finite
    int lp_iterations = 0;
};

/// F*(x*, x) as the LP  min sum lambda_k (-c_k)  s.t. the weighted piece
/// slopes reproduce (x*, x) and lambda lies in the unit simplex.
ConjugateValue eval_conjugate(const AffinePieceSet& pieces, const Vector& x_star,
                              const Vector& x, const Tolerances& tols = {});
ConjugateValue eval_conjugate(const OperatorGraph& graph, int n, const Vector& x_star,
                              const Vector& x, const Tolerances& tols = {},
                              long long budget = kDefaultWalkBudget);

struct DominanceViolation {
    Vector x_star;
    Vector x;
    double pairing_value = 0.0;
    double conjugate_value = 0.0;
};

/// Samples dom F* through simplex weights over the pieces and records every
/// point where <x*, x> exceeds F*(x*, x) + feas_tol. A falsifier, not a
/// prover: an empty result does not certify p <= F*.
std::vector<DominanceViolation> pairing_dominance_scan(const OperatorGraph& graph, int n,
                                                       int num_samples, std::uint64_t seed = 0,
                                                       const Tolerances& tols = {},
                                                       long long budget = kDefaultWalkBudget);

struct SandwichFailure {
    Vector x_star;
    Vector x;
};

struct SandwichReport {
    int n = 2;
    int num_samples = 0;
    std::uint64_t seed = 0;
    int failures = 0;
    std::vector<SandwichFailure> failed_points;  // first few only
};

/// Lower domain inclusions: co G(S) (n = 2) resp. co D(S) x co R(S) (n >= 3)
/// must give finite conjugate values.
SandwichReport domain_sandwich_check(const OperatorGraph& graph, int n, int num_samples,
                                     std::uint64_t seed = 0, const Tolerances& tols = {},
                                     long long budget = kDefaultWalkBudget);

enum class FStarMethod { Direct, InfConv };

/// f*(y*) with f(x) = <Bx, x> + indicator of C = co D(S).
/// Direct maximizes the concave quadratic over C by away-step Frank-Wolfe
/// with the vertex oracle over D(S); InfConv minimizes the infimal
/// convolution form h* box sigma_C restricted to the range of Q = B + B^T.
double eval_f_star(const OperatorGraph& graph, const LinearOperator& B, const Vector& y_star,
                   FStarMethod method = FStarMethod::Direct, const Tolerances& tols = {});

struct DualityGapReport {
    double dual_value = 0.0;    // max_x { -F(x, w*-Bx) - <Bx,x> + <w*,x> }
    double primal_value = 0.0;  // inf { F*(x*,x) + f*(B^T x - x*) } (translated graph)
    double gap = 0.0;
    int dual_iterations = 0;
    int primal_iterations = 0;
    double pointwise_min = 0.0;  // min of F* + f* over the sampled points
    int pointwise_samples = 0;
    int pointwise_violations = 0;  // sum below -feas_tol
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

DualityGapReport duality_gap_report(const ExtensionInstance& instance, int num_samples = 200,
                                    std::uint64_t seed = 0);

}  // namespace cyclomon
