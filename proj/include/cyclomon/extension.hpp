#pragma once

// Hypothesis checks for the three extension theorems, the extension-point
// solver (Kelley cutting planes on phi(x) = F(x, w*-Bx) + <Bx,x> - <w*,x>
// over co D(S)), and direct certification of computed points.

#include <cstdint>

#include "cyclomon/conjugate.hpp"
#include "cyclomon/core.hpp"
#include "cyclomon/monotonicity.hpp"

namespace cyclomon {

struct HypothesisReport {
    bool graph_n_monotone = false;
    bool dominance_scan_clean = false;
    int dominance_samples = 0;
    std::uint64_t dominance_seed = 0;
    bool B_monotone = false;
    bool B_strongly_coercive = false;     // in R^d coercive and strongly coercive coincide
    bool condition_graph_feasible = false;  // (0, w*) in co G(S) - G(B*) via LP
    bool condition_core_satisfied = false;  // ba D(S) = R^d for finite graphs
    bool condition_domain_feasible = false; // piece-LP variant over dom F*^T (flagged)
    std::vector<std::string> applicable_theorems;  // subset of {"T1","T2","T3"}
    std::vector<std::string> notes;
};

/// use_piece_lp_condition additionally decides membership of (0, w*) in
/// dom(F*^T) - G(B*) through the piece LP (otherwise that flag mirrors the
/// co G(S) surrogate).
HypothesisReport check_hypotheses(const ExtensionInstance& instance, int dominance_samples = 200,
                                  std::uint64_t seed = 0, bool use_piece_lp_condition = false);

enum class SolveStatus { Certified, IterationLimit, CertificationFailed };

struct ExtensionResult {
    SolveStatus status = SolveStatus::IterationLimit;
    Vector x;
    Vector x_star;   // w* - Bx
    Vector lambda;   // simplex weights over D(S) reproducing x
    double phi_value = 0.0;
    MonotonicityReport certificate;  // enlarged-graph n-monotonicity
    bool candidate_agrees = true;    // candidate_test vs certificate verdict
    int iterations = 0;
    std::vector<double> phi_trace;   // best phi after each iterate
    HypothesisReport hypothesis;
    std::vector<std::string> warnings;
};

/// Minimizes phi over co D(S) on the translated graph (S' = S - w*) and maps
/// back. Default mode returns the first iterate with phi <= feas_tol whose
/// certificate passes; to_optimality ignores that exit and drives the
/// cutting-plane gap below opt_tol.
ExtensionResult solve_extension(const ExtensionInstance& instance, bool to_optimality = false,
                                int hypothesis_samples = 200, std::uint64_t seed = 0);

/// Appends (x, w*-Bx) to the graph and re-checks n-monotonicity; the
/// candidate test is cross-checked and any disagreement is reported through
/// candidate_agrees.
MonotonicityReport certify_extension(const ExtensionInstance& instance, const Vector& x,
                                     bool* candidate_agrees = nullptr);

}  // namespace cyclomon
