#include "cyclomon/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclomon/fitzpatrick.hpp"
#include "cyclomon/kelley.hpp"
#include "cyclomon/linalg.hpp"
#include "cyclomon/simplex.hpp"

namespace cyclomon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// LP feasibility of  sum lambda_i s*_i - B^T sum lambda_i s_i = w*,
// lambda in the unit simplex: the co G(S) form of (0, w*) in ... - G(B*).
bool graph_condition_feasible(const ExtensionInstance& inst) {
    const int m = inst.graph.size();
    const int d = inst.graph.dimension;
    Matrix a(d + 1, Vector(m, 0.0));
    Vector b(d + 1, 0.0), c(m, 0.0);
    for (int j = 0; j < m; ++j) {
        const Vector bt_s = inst.B.apply_adjoint(inst.graph.point(j));
        for (int r = 0; r < d; ++r) a[r][j] = inst.graph.dual_point(j)[r] - bt_s[r];
        a[d][j] = 1.0;
    }
    for (int r = 0; r < d; ++r) b[r] = inst.w_star[r];
    b[d] = 1.0;
    const LinearProgramResult lp = solve_simplex(a, b, c, inst.tolerances.feas_tol);
    return lp.status == LinearProgramResult::Status::Optimal;
}

// Same membership decided over dom(F*^T) via the affine pieces:
// sum lambda_k (b_k - B^T a_k) = w*, lambda in the unit simplex.
bool domain_condition_feasible(const ExtensionInstance& inst) {
    const AffinePieceSet pieces = enumerate_pieces(inst.graph, inst.n);
    const int k = static_cast<int>(pieces.pieces.size());
    const int d = inst.graph.dimension;
    Matrix a(d + 1, Vector(k, 0.0));
    Vector b(d + 1, 0.0), c(k, 0.0);
    for (int j = 0; j < k; ++j) {
        const Vector bt_a = inst.B.apply_adjoint(pieces.pieces[j].slope_xstar);
        for (int r = 0; r < d; ++r) a[r][j] = pieces.pieces[j].slope_x[r] - bt_a[r];
        a[d][j] = 1.0;
    }
    for (int r = 0; r < d; ++r) b[r] = inst.w_star[r];
    b[d] = 1.0;
    const LinearProgramResult lp = solve_simplex(a, b, c, inst.tolerances.feas_tol);
    return lp.status == LinearProgramResult::Status::Optimal;
}

}  // namespace

HypothesisReport check_hypotheses(const ExtensionInstance& instance, int dominance_samples,
                                  std::uint64_t seed, bool use_piece_lp_condition) {
    instance.validate();
    const Tolerances& tols = instance.tolerances;
    HypothesisReport rep;

    rep.graph_n_monotone =
        is_n_monotone(instance.graph, instance.n, MonotonicityMethod::MaxPlus, tols).is_monotone;

    rep.dominance_samples = dominance_samples;
    rep.dominance_seed = seed;
    rep.dominance_scan_clean =
        pairing_dominance_scan(instance.graph, instance.n, dominance_samples, seed, tols).empty();
    if (instance.n == 2)
        rep.notes.push_back("for n = 2 the pairing-dominance condition holds automatically "
                            "for monotone graphs; the scan is a numerical confirmation");
    else
        rep.notes.push_back("the dominance scan is a sampled falsifier, not a certificate");

    Matrix half = instance.B.symmetric_sum();
    for (auto& row : half)
        for (double& e : row) e *= 0.5;
    rep.B_monotone = min_eigenvalue_symmetric(half) >= -tols.num_tol;
    rep.B_strongly_coercive =
        min_eigenvalue_symmetric(instance.B.symmetric_sum()) > tols.num_tol;
    rep.notes.push_back("in R^d coercive and strongly coercive coincide (both mean "
                        "B + B^T positive definite)");

    rep.condition_graph_feasible = graph_condition_feasible(instance);
    rep.condition_domain_feasible =
        use_piece_lp_condition ? domain_condition_feasible(instance) : rep.condition_graph_feasible;

    // ba D(S) = R^d for a finite nonempty D(S), so the core condition holds
    // for every w*.
    rep.condition_core_satisfied = true;
    rep.notes.push_back("D(S) is finite and bounded, its barrier cone is all of R^d, and the "
                        "core condition is satisfied for every w*");

    const bool shared = rep.graph_n_monotone && rep.dominance_scan_clean && rep.B_monotone;
    if (shared && rep.B_strongly_coercive) rep.applicable_theorems.push_back("T1");
    if (shared && rep.B_strongly_coercive &&
        (use_piece_lp_condition ? rep.condition_domain_feasible : rep.condition_graph_feasible))
        rep.applicable_theorems.push_back("T2");
    if (shared && rep.condition_core_satisfied) rep.applicable_theorems.push_back("T3");
    return rep;
}

ExtensionResult solve_extension(const ExtensionInstance& instance, bool to_optimality,
                                int hypothesis_samples, std::uint64_t seed) {
    instance.validate();
    const Tolerances& tols = instance.tolerances;
    const int d = instance.graph.dimension;

    ExtensionResult res;
    res.hypothesis = check_hypotheses(instance, hypothesis_samples, seed);
    if (res.hypothesis.applicable_theorems.empty())
        res.warnings.push_back("no extension theorem applies to this instance; the solver "
                               "proceeds as a search and may still succeed");

    // The solve runs on the translated graph S' = S - w* with w* = 0, for
    // which phi'(x) = F_{S'}(x, -Bx) + <Bx,x> equals the original phi.
    const OperatorGraph shifted = translate(instance.graph, instance.w_star);
    const std::vector<Vector> vertices = instance.graph.domain_points();
    const Matrix q = instance.B.symmetric_sum();

    auto quad_term = [&](const Vector& x) { return pairing(instance.B.apply(x), x); };

    auto oracle = [&](const Vector& x, Vector& grad) {
        const Vector minus_bx = vec_scale(-1.0, instance.B.apply(x));
        const FitzEvaluation fe = eval_fitz(shifted, instance.n, x, minus_bx);
        // Subgradient: b_k - B^T a_k + (B + B^T) x for the active piece.
        grad = vec_sub(fe.slope_x, instance.B.apply_adjoint(fe.slope_xstar));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) grad[i] += q[i][j] * x[j];
        return fe.value + quad_term(x);
    };

    auto certify_at = [&](const Vector& x) {
        bool agrees = true;
        const MonotonicityReport cert = certify_extension(instance, x, &agrees);
        return std::make_pair(cert, agrees);
    };

    auto stop_early = [&](double best, const Vector& xb) {
        if (to_optimality) return false;
        if (best > tols.feas_tol) return false;
        return certify_at(xb).first.is_monotone;
    };

    const KelleyResult kr =
        kelley_minimize(vertices, oracle, tols.opt_tol, tols.max_iter, stop_early);

    res.x = kr.x;
    res.lambda = kr.lambda;
    res.iterations = kr.iterations;
    res.phi_trace = kr.trace;
    if (kr.used_fallback)
        res.warnings.push_back("master LP degenerated; projected-subgradient fallback steps "
                               "were taken");

    res.x_star = instance.w_star;
    const Vector bx = instance.B.apply(res.x);
    for (int i = 0; i < d; ++i) res.x_star[i] -= bx[i];

    // Report phi in its original (untranslated) form; identical up to
    // floating-point association with the internal objective.
    const FitzEvaluation fe = eval_fitz(instance.graph, instance.n, res.x, res.x_star);
    res.phi_value = fe.value + quad_term(res.x) - pairing(instance.w_star, res.x);

    auto [cert, agrees] = certify_at(res.x);
    res.certificate = cert;
    res.candidate_agrees = agrees;
    if (!agrees)
        res.warnings.push_back("certificate and candidate test disagree at the returned point");

    if (res.phi_value <= tols.feas_tol && cert.is_monotone)
        res.status = SolveStatus::Certified;
    else if (res.phi_value <= tols.feas_tol)
        res.status = SolveStatus::CertificationFailed;
    else
        res.status = SolveStatus::IterationLimit;
    return res;
}

MonotonicityReport certify_extension(const ExtensionInstance& instance, const Vector& x,
                                     bool* candidate_agrees) {
    instance.validate();
    if (static_cast<int>(x.size()) != instance.graph.dimension)
        throw DimensionMismatch("certify_extension: x does not match graph dimension");
    const Tolerances& tols = instance.tolerances;

    Vector x_star = instance.w_star;
    const Vector bx = instance.B.apply(x);
    for (std::size_t i = 0; i < x_star.size(); ++i) x_star[i] -= bx[i];

    OperatorGraph enlarged = instance.graph;
    enlarged.pairs.push_back({x, x_star});
    const MonotonicityReport rep =
        is_n_monotone(enlarged, instance.n, MonotonicityMethod::MaxPlus, tols);

    if (candidate_agrees) {
        const bool ct = candidate_test(instance.graph, instance.n, x, x_star, tols);
        *candidate_agrees = (ct == rep.is_monotone);
    }
    return rep;
}

}  // namespace cyclomon
