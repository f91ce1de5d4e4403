// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are hand-derived or recomputed by the stated
// independent oracle inside each criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cyclomon/conjugate.hpp"
#include "cyclomon/extension.hpp"
#include "cyclomon/fitzpatrick.hpp"
#include "cyclomon/linalg.hpp"
#include "cyclomon/monotonicity.hpp"
#include "cyclomon/sampling.hpp"
#include "test_graphs.hpp"

using namespace cyclomon;
using namespace cyclotest;

namespace {

int g_failures = 0;
const Tolerances kTols;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("criterion %2d %s  %s (%s)\n", index, ok ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExtensionInstance make_instance(OperatorGraph g, int n, LinearOperator b, Vector w) {
    ExtensionInstance inst;
    inst.graph = std::move(g);
    inst.n = n;
    inst.B = std::move(b);
    inst.w_star = std::move(w);
    return inst;
}

LinearOperator scalar_b(double v) {
    LinearOperator b;
    b.entries = {{v}};
    return b;
}

// Classical Fitzpatrick formula for n = 2, written independently of eval_fitz.
double classical_fitz2(const OperatorGraph& g, const Vector& x, const Vector& x_star) {
    double best = -1e300;
    for (int j = 0; j < g.size(); ++j) {
        const double v = pairing(x_star, g.point(j)) + pairing(g.dual_point(j), x) -
                         pairing(g.dual_point(j), g.point(j));
        if (v > best) best = v;
    }
    return best;
}

// 1. Over >= 200 random graphs (m <= 4, d <= 3, n <= 5) brute-force and
//    max-plus agree; worst sums within 1e-9; total runtime < 10 s.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    SampleRng rng(1001);
    int mismatches = 0;
    const int total = 220;
    for (int trial = 0; trial < total; ++trial) {
        const int m = rng.uniform_int(1, 4);
        const int d = rng.uniform_int(1, 3);
        const int n = rng.uniform_int(2, 5);
        const OperatorGraph g =
            trial % 3 == 0 ? random_two_monotone_graph(rng, m, d) : random_graph(rng, m, d);
        const auto bf = is_n_monotone(g, n, MonotonicityMethod::Bruteforce, kTols);
        const auto mp = is_n_monotone(g, n, MonotonicityMethod::MaxPlus, kTols);
        if (bf.is_monotone != mp.is_monotone || std::fabs(bf.worst_sum - mp.worst_sum) > 1e-9)
            ++mismatches;
    }
    const double secs = seconds_since(t0);
    report(1, "oracle equivalence (monotonicity)", mismatches == 0 && secs < 10.0,
           std::to_string(total) + " graphs, " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(secs) + " s");
}

// 2. naive vs dp within 1e-9 at 100 random query points per graph; for n = 2
//    the dp value equals the classical formula exactly.
void criterion_2() {
    SampleRng rng(1002);
    int value_mismatches = 0, exact_mismatches = 0;
    const int graphs = 200;
    for (int trial = 0; trial < graphs; ++trial) {
        const int m = rng.uniform_int(1, 4);
        const int d = rng.uniform_int(1, 3);
        const int n = rng.uniform_int(2, 5);
        const OperatorGraph g = random_graph(rng, m, d);
        for (int q = 0; q < 100; ++q) {
            const Vector x = random_vector(rng, d);
            const Vector xs = random_vector(rng, d);
            const double naive = eval_fitz(g, n, x, xs, FitzMethod::Naive).value;
            const double dp = eval_fitz(g, n, x, xs, FitzMethod::Dp).value;
            if (std::fabs(naive - dp) > 1e-9) ++value_mismatches;
            if (eval_fitz(g, 2, x, xs).value != classical_fitz2(g, x, xs)) ++exact_mismatches;
        }
    }
    report(2, "oracle equivalence (Fitzpatrick)", value_mismatches == 0 && exact_mismatches == 0,
           std::to_string(graphs) + " graphs x 100 points, " +
               std::to_string(value_mismatches) + " dp/naive, " +
               std::to_string(exact_mismatches) + " exact n=2 mismatches");
}

// 3. G4 is 2-monotone (worst sum 0 +- 1e-12) and not 3-monotone with worst
//    3-cycle sum 2.0 +- 1e-12 realized by the cycle [1,2,3].
void criterion_3() {
    const auto r2 = is_n_monotone(g4(), 2, MonotonicityMethod::MaxPlus, kTols);
    const auto r3 = is_n_monotone(g4(), 3, MonotonicityMethod::MaxPlus, kTols);
    std::vector<int> labels;
    for (int i : r3.worst_cycle) labels.push_back(i + 1);  // reports use 1-based labels
    const bool ok = r2.is_monotone && std::fabs(r2.worst_sum) <= 1e-12 && !r3.is_monotone &&
                    std::fabs(r3.worst_sum - 2.0) <= 1e-12 &&
                    labels == std::vector<int>{1, 2, 3};
    report(3, "rotation witness", ok,
           "2-mono " + std::to_string(r2.worst_sum) + ", 3-cycle sum " +
               std::to_string(r3.worst_sum));
}

// 4. Hand LP values of F* on G1.
void criterion_4() {
    const ConjugateValue a = eval_conjugate(g1(), 2, {0.5}, {0.5}, kTols);
    const ConjugateValue b = eval_conjugate(g1(), 2, {0.2}, {0.8}, kTols);
    const ConjugateValue c = eval_conjugate(g1(), 3, {0.5}, {0.25}, kTols);
    const bool ok = a.finite && std::fabs(a.value - 0.5) <= 1e-8 && !b.finite && c.finite &&
                    std::fabs(c.value - 0.5) <= 1e-8;
    report(4, "hand LP values", ok,
           "F*2(.5,.5)=" + std::to_string(a.value) + ", F*2(.2,.8) infinite=" +
               std::to_string(!b.finite) + ", F*3(.5,.25)=" + std::to_string(c.value));
}

// 5. 50 random strongly coercive instances: phi <= 1e-7 within 500 iterations
//    and certification passes, < 2 s per instance.
void criterion_5() {
    SampleRng rng(1005);
    int failures = 0;
    double worst_secs = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int d = rng.uniform_int(1, 3);
        const int m = rng.uniform_int(1, 5);
        const int n = 2 + trial % 3;
        const auto inst =
            make_instance(random_cyclically_monotone_graph(rng, m, d), n,
                          random_strongly_monotone_operator(rng, d), random_vector(rng, d));
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = solve_extension(inst);
        worst_secs = std::max(worst_secs, seconds_since(t0));
        if (res.status != SolveStatus::Certified || res.phi_value > 1e-7 ||
            res.iterations > 500 || !res.certificate.is_monotone || !res.candidate_agrees)
            ++failures;
    }
    report(5, "extension closed loop", failures == 0 && worst_secs < 2.0,
           "50 instances, " + std::to_string(failures) + " failures, worst " +
               std::to_string(worst_secs) + " s");
}

// 6. Hand extension values on G1.
void criterion_6() {
    const auto r0 = solve_extension(make_instance(g1(), 2, scalar_b(1.0), {0.0}));
    const bool ok0 = r0.status == SolveStatus::Certified && std::fabs(r0.x[0]) <= 1e-6;

    const auto r1 = solve_extension(make_instance(g1(), 2, scalar_b(1.0), {1.0}));
    const bool ok1 = std::fabs(r1.phi_value - (-0.25)) <= 1e-6 &&
                     std::fabs(r1.x[0] - 0.5) <= 1e-4;

    const auto r2 = solve_extension(make_instance(g1(), 2, scalar_b(0.0), {0.5}));
    const bool ok2 = std::fabs(r2.phi_value - (-0.25)) <= 1e-6;

    report(6, "hand extension values", ok0 && ok1 && ok2,
           "x0=" + std::to_string(r0.x[0]) + ", phi1=" + std::to_string(r1.phi_value) +
               " at x=" + std::to_string(r1.x[0]) + ", phi2=" + std::to_string(r2.phi_value));
}

// 7. n = 2 pairing dominance: 0 violations over 1000 samples on each of 20
//    random 2-monotone graphs.
void criterion_7() {
    SampleRng rng(1007);
    int violations = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const OperatorGraph g =
            random_two_monotone_graph(rng, rng.uniform_int(1, 4), rng.uniform_int(1, 3));
        violations += static_cast<int>(
            pairing_dominance_scan(g, 2, 1000, 1007 + trial, kTols).size());
    }
    report(7, "pairing dominance for n = 2", violations == 0,
           "20 graphs x 1000 samples, " + std::to_string(violations) + " violations");
}

// 8. Translation identities for F (1e-9) and F* (1e-7) on G1 and G4.
void criterion_8() {
    SampleRng rng(1008);
    int f_bad = 0, fstar_bad = 0;
    for (const auto& g : {g1(), g4()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + trial % 3;
            const Vector w = random_vector(rng, g.dimension);
            const OperatorGraph shifted = translate(g, w);
            const Vector x = random_vector(rng, g.dimension);
            const Vector xs = random_vector(rng, g.dimension);
            const double lhs = eval_fitz(shifted, n, x, xs).value;
            const double rhs = eval_fitz(g, n, x, vec_add(xs, w)).value - pairing(w, x);
            if (std::fabs(lhs - rhs) > 1e-9) ++f_bad;
        }
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + trial % 3;
            const Vector w = random_vector(rng, g.dimension);
            const OperatorGraph shifted = translate(g, w);
            const AffinePieceSet sp = enumerate_pieces(shifted, n);
            const AffinePieceSet op = enumerate_pieces(g, n);
            const int k = static_cast<int>(sp.pieces.size());
            const Vector lam = rng.dirichlet(k);
            Vector xs(g.dimension, 0.0), x(g.dimension, 0.0);
            for (int j = 0; j < k; ++j) {
                vec_axpy(lam[j], sp.pieces[j].slope_x, xs);
                vec_axpy(lam[j], sp.pieces[j].slope_xstar, x);
            }
            const ConjugateValue lhs = eval_conjugate(sp, xs, x, kTols);
            const ConjugateValue rhs = eval_conjugate(op, vec_add(xs, w), x, kTols);
            if (!lhs.finite || !rhs.finite ||
                std::fabs(lhs.value - (rhs.value - pairing(w, x))) > 1e-7)
                ++fstar_bad;
        }
    }
    report(8, "translation identities", f_bad == 0 && fstar_bad == 0,
           "F mismatches " + std::to_string(f_bad) + ", F* mismatches " +
               std::to_string(fstar_bad));
}

// 9. Duality gap on the criterion-6 instances: |dual - primal| <= 1e-6 and
//    the pointwise sum F* + f*(B^T x - x*) >= -1e-7 at every sampled point.
void criterion_9() {
    const std::vector<ExtensionInstance> instances = {
        make_instance(g1(), 2, scalar_b(1.0), {0.0}),
        make_instance(g1(), 2, scalar_b(1.0), {1.0}),
        make_instance(g1(), 2, scalar_b(0.0), {0.5}),
    };
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto rep = duality_gap_report(instances[i], 200, 9000 + i);
        ok = ok && rep.gap <= 1e-6 && rep.pointwise_min >= -1e-7;
        detail += (i ? "; " : "") + std::string("gap=") + std::to_string(rep.gap) +
                  " ptmin=" + std::to_string(rep.pointwise_min);
    }
    report(9, "duality gap", ok, detail);
}

// 10. Potential construction: G1 potential equals max(0, x-1) on a 101-point
//     grid over [-2, 3] within 1e-12, verify_potential passes; G2 raises
//     NotCyclicallyMonotone with cycle sum 1.
void criterion_10() {
    const MaxAffineFunction f = rockafellar_potential(g1(), 0, kTols);
    int grid_bad = 0;
    for (int i = 0; i <= 100; ++i) {
        const double x = -2.0 + 5.0 * i / 100.0;
        if (std::fabs(f.value({x}) - std::max(0.0, x - 1.0)) > 1e-12) ++grid_bad;
    }
    const bool verified = verify_potential(g1(), f, {{-2.0}, {-1.0}, {0.0}, {0.5}, {1.0}, {2.0},
                                                     {3.0}},
                                           kTols);
    bool threw = false;
    double sum = 0.0;
    try {
        rockafellar_potential(g2(), 0, kTols);
    } catch (const NotCyclicallyMonotone& e) {
        threw = true;
        sum = e.cycle_sum;
    }
    const bool ok = grid_bad == 0 && verified && threw && std::fabs(sum - 1.0) <= 1e-12;
    report(10, "potential construction", ok,
           std::to_string(grid_bad) + " grid mismatches, verified=" + std::to_string(verified) +
               ", G2 cycle sum " + std::to_string(sum));
}

// 11. Domain sandwich: 500 sampled points finite for G1 and G4, n in {2,3,4}.
void criterion_11() {
    int failures = 0;
    int per_graph = 0;
    for (const auto& g : {g1(), g4()}) {
        for (int n = 2; n <= 4; ++n) {
            const auto rep = domain_sandwich_check(g, n, 500, 1100 + n, kTols);
            failures += rep.failures;
            per_graph += rep.num_samples;
        }
    }
    report(11, "domain sandwich", failures == 0,
           std::to_string(per_graph) + " samples, " + std::to_string(failures) +
               " infinite values");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
