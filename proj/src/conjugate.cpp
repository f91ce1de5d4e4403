#include "cyclomon/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclomon/extension.hpp"
#include "cyclomon/kelley.hpp"
#include "cyclomon/linalg.hpp"
#include "cyclomon/sampling.hpp"
#include "cyclomon/simplex.hpp"

namespace cyclomon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool chain_budget_ok(int m, int n, long long budget) {
    double total = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        total *= m;
        if (total > static_cast<double>(budget)) return false;
    }
    return true;
}

void require_monotone_b(const LinearOperator& b, const Tolerances& tols) {
    Matrix half = b.symmetric_sum();
    for (auto& row : half)
        for (double& e : row) e *= 0.5;
    if (min_eigenvalue_symmetric(half) < -tols.num_tol)
        throw std::invalid_argument("eval_f_star: B is not monotone");
}

// Away-step Frank-Wolfe for  max <y*,x> - <Bx,x>  over conv(vertices).
// The FW gap certifies suboptimality of the returned value; argmax_out (if
// given) receives the maximizer.
double f_star_direct(const std::vector<Vector>& vertices, const LinearOperator& b,
                     const Vector& y_star, const Tolerances& tols, Vector* argmax_out) {
    const int m = static_cast<int>(vertices.size());
    const int d = static_cast<int>(y_star.size());
    const Matrix q = b.symmetric_sum();

    Vector lambda(m, 0.0);
    lambda[0] = 1.0;
    auto combine = [&](const Vector& lam) {
        Vector x(d, 0.0);
        for (int i = 0; i < m; ++i)
            if (lam[i] != 0.0) vec_axpy(lam[i], vertices[i], x);
        return x;
    };
    auto objective = [&](const Vector& x) { return pairing(y_star, x) - pairing(b.apply(x), x); };

    const double stop_gap = 0.5 * tols.opt_tol;
    const int fw_max_iter = 200000;
    Vector x = combine(lambda);
    for (int iter = 0; iter < fw_max_iter; ++iter) {
        Vector grad = y_star;
        Vector qx(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) qx[i] += q[i][j] * x[j];
        for (int i = 0; i < d; ++i) grad[i] -= qx[i];

        int fw = 0, away = -1;
        double fw_best = -kInf, away_best = kInf;
        for (int i = 0; i < m; ++i) {
            const double sc = pairing(grad, vertices[i]);
            if (sc > fw_best) {
                fw_best = sc;
                fw = i;
            }
            if (lambda[i] > 1e-14 && sc < away_best) {
                away_best = sc;
                away = i;
            }
        }
        const double gap = fw_best - pairing(grad, x);
        if (gap <= stop_gap) break;

        Vector dir(d);
        double gamma_max;
        bool is_away_step = false;
        const double away_gain = away >= 0 ? pairing(grad, x) - away_best : -kInf;
        if (away >= 0 && away_gain > gap && lambda[away] < 1.0 - 1e-14) {
            for (int i = 0; i < d; ++i) dir[i] = x[i] - vertices[away][i];
            gamma_max = lambda[away] / (1.0 - lambda[away]);
            is_away_step = true;
        } else {
            for (int i = 0; i < d; ++i) dir[i] = vertices[fw][i] - x[i];
            gamma_max = 1.0;
        }

        const double lin = pairing(grad, dir);
        if (lin <= 0.0) break;
        double quad = pairing(b.apply(dir), dir);  // = (1/2) d^T Q d >= 0
        double gamma = quad > 1e-300 ? lin / (2.0 * quad) : gamma_max;
        gamma = std::min(gamma, gamma_max);
        if (gamma <= 0.0) break;

        if (is_away_step) {
            for (int i = 0; i < m; ++i) lambda[i] *= (1.0 + gamma);
            lambda[away] -= gamma;
            if (lambda[away] < 1e-15) lambda[away] = 0.0;
        } else {
            for (int i = 0; i < m; ++i) lambda[i] *= (1.0 - gamma);
            lambda[fw] += gamma;
        }
        x = combine(lambda);
    }
    if (argmax_out) *argmax_out = x;
    return objective(x);
}

// Infimal-convolution route: with u restricted to the range of Q via u = Qz,
// h*(Qz) = (1/2) z^T Q z, so f*(y*) = min over z in C of
// (1/2) z^T Q z + sigma_C(y* - Qz); the minimum is attained at z equal to
// the direct-route maximizer, hence taking z over C is exact.
double f_star_infconv(const std::vector<Vector>& vertices, const LinearOperator& b,
                      const Vector& y_star, const Tolerances& tols) {
    const int d = static_cast<int>(y_star.size());
    const Matrix q = b.symmetric_sum();

    auto qmul = [&](const Vector& z) {
        Vector out(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out[i] += q[i][j] * z[j];
        return out;
    };
    auto sigma_argmax = [&](const Vector& v) {
        int arg = 0;
        double best = -kInf;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const double sc = pairing(v, vertices[i]);
            if (sc > best) {
                best = sc;
                arg = static_cast<int>(i);
            }
        }
        return arg;
    };

    auto oracle = [&](const Vector& z, Vector& grad) {
        const Vector qz = qmul(z);
        Vector v(d);
        for (int i = 0; i < d; ++i) v[i] = y_star[i] - qz[i];
        const int j = sigma_argmax(v);
        const double value = 0.5 * pairing(qz, z) + pairing(v, vertices[j]);
        const Vector qs = qmul(vertices[j]);
        for (int i = 0; i < d; ++i) grad[i] = qz[i] - qs[i];
        return value;
    };

    const KelleyResult res =
        kelley_minimize(vertices, oracle, 0.5 * tols.opt_tol, std::max(400, tols.max_iter));
    return res.value;
}

}  // namespace

double AffinePieceSet::value(const Vector& x, const Vector& x_star) const {
    double best = -kInf;
    for (const auto& p : pieces) {
        const double v = pairing(p.slope_x, x) + pairing(x_star, p.slope_xstar) + p.intercept;
        if (v > best) best = v;
    }
    return best;
}

AffinePieceSet enumerate_pieces(const OperatorGraph& graph, int n, long long budget) {
    graph.validate();
    if (n < 2) throw std::invalid_argument("enumerate_pieces: n must be at least 2");
    const int m = graph.size();
    if (!chain_budget_ok(m, n, budget))
        throw BudgetExceeded("enumerate_pieces: m^(n-1) exceeds the chain budget");

    const WeightMatrix w = weight_matrix(graph);
    AffinePieceSet out;
    out.n = n;
    out.dimension = graph.dimension;

    const int len = n - 1;
    std::vector<int> chain(len, 0);
    for (;;) {
        AffinePiece piece;
        const int last = chain[len - 1];
        piece.slope_x = graph.dual_point(last);
        piece.slope_xstar = graph.point(chain[0]);
        double c = 0.0;
        for (int t = 0; t + 1 < len; ++t) c += w[chain[t]][chain[t + 1]];
        c -= pairing(graph.dual_point(last), graph.point(last));
        piece.intercept = c;
        piece.chain = chain;
        out.pieces.push_back(std::move(piece));

        int pos = len - 1;
        while (pos >= 0 && chain[pos] == m - 1) chain[pos--] = 0;
        if (pos < 0) break;
        ++chain[pos];
    }
    return out;
}

ConjugateValue eval_conjugate(const AffinePieceSet& pieces, const Vector& x_star,
                              const Vector& x, const Tolerances& tols) {
    const int d = pieces.dimension;
    if (static_cast<int>(x_star.size()) != d || static_cast<int>(x.size()) != d)
        throw DimensionMismatch("eval_conjugate: query point does not match dimension");
    const int k = static_cast<int>(pieces.pieces.size());

    // min sum lambda_k (-c_k)
    // s.t. sum lambda_k slope_x,k = x*, sum lambda_k slope_xstar,k = x,
    //      lambda in the unit simplex.
    Matrix a(2 * d + 1, Vector(k, 0.0));
    Vector b(2 * d + 1, 0.0), c(k, 0.0);
    for (int j = 0; j < k; ++j) {
        for (int r = 0; r < d; ++r) {
            a[r][j] = pieces.pieces[j].slope_x[r];
            a[d + r][j] = pieces.pieces[j].slope_xstar[r];
        }
        a[2 * d][j] = 1.0;
        c[j] = -pieces.pieces[j].intercept;
    }
    for (int r = 0; r < d; ++r) {
        b[r] = x_star[r];
        b[d + r] = x[r];
    }
    b[2 * d] = 1.0;

    const LinearProgramResult lp = solve_simplex(a, b, c, tols.feas_tol);
    ConjugateValue out;
    out.lp_iterations = lp.iterations;
    if (lp.status == LinearProgramResult::Status::Infeasible) {
        out.finite = false;
        out.value = kInf;
        return out;
    }
    if (lp.status != LinearProgramResult::Status::Optimal)
        throw std::runtime_error("eval_conjugate: LP solver failed after " +
                                 std::to_string(lp.iterations) + " iterations");
    out.finite = true;
    out.value = lp.objective;
    out.certificate = lp.x;
    return out;
}

ConjugateValue eval_conjugate(const OperatorGraph& graph, int n, const Vector& x_star,
                              const Vector& x, const Tolerances& tols, long long budget) {
    return eval_conjugate(enumerate_pieces(graph, n, budget), x_star, x, tols);
}

std::vector<DominanceViolation> pairing_dominance_scan(const OperatorGraph& graph, int n,
                                                       int num_samples, std::uint64_t seed,
                                                       const Tolerances& tols,
                                                       long long budget) {
    const AffinePieceSet pieces = enumerate_pieces(graph, n, budget);
    const int k = static_cast<int>(pieces.pieces.size());
    const int d = pieces.dimension;
    SampleRng rng(seed);

    std::vector<DominanceViolation> violations;
    for (int s = 0; s < num_samples; ++s) {
        const Vector lam = rng.dirichlet(k);
        Vector x_star(d, 0.0), x(d, 0.0);
        for (int j = 0; j < k; ++j) {
            vec_axpy(lam[j], pieces.pieces[j].slope_x, x_star);
            vec_axpy(lam[j], pieces.pieces[j].slope_xstar, x);
        }
        const ConjugateValue cv = eval_conjugate(pieces, x_star, x, tols);
        if (!cv.finite) continue;  // +infinity dominates every pairing value
        const double p = pairing(x_star, x);
        if (p > cv.value + tols.feas_tol)
            violations.push_back({x_star, x, p, cv.value});
    }
    return violations;
}

SandwichReport domain_sandwich_check(const OperatorGraph& graph, int n, int num_samples,
                                     std::uint64_t seed, const Tolerances& tols,
                                     long long budget) {
    graph.validate();
    const AffinePieceSet pieces = enumerate_pieces(graph, n, budget);
    const int m = graph.size();
    const int d = graph.dimension;
    SampleRng rng(seed);

    SandwichReport rep;
    rep.n = n;
    rep.num_samples = num_samples;
    rep.seed = seed;
    for (int s = 0; s < num_samples; ++s) {
        Vector x(d, 0.0), x_star(d, 0.0);
        if (n == 2) {
            // co G(S): one set of weights for the joint pairs.
            const Vector lam = rng.dirichlet(m);
            for (int j = 0; j < m; ++j) {
                vec_axpy(lam[j], graph.point(j), x);
                vec_axpy(lam[j], graph.dual_point(j), x_star);
            }
        } else {
            // co D(S) x co R(S): independent weights per factor.
            const Vector lam = rng.dirichlet(m);
            const Vector mu = rng.dirichlet(m);
            for (int j = 0; j < m; ++j) {
                vec_axpy(lam[j], graph.point(j), x);
                vec_axpy(mu[j], graph.dual_point(j), x_star);
            }
        }
        const ConjugateValue cv = eval_conjugate(pieces, x_star, x, tols);
        if (!cv.finite) {
            ++rep.failures;
            if (rep.failed_points.size() < 8) rep.failed_points.push_back({x_star, x});
        }
    }
    return rep;
}

double eval_f_star(const OperatorGraph& graph, const LinearOperator& B, const Vector& y_star,
                   FStarMethod method, const Tolerances& tols) {
    graph.validate();
    B.validate(graph.dimension);
    if (static_cast<int>(y_star.size()) != graph.dimension)
        throw DimensionMismatch("eval_f_star: y_star does not match graph dimension");
    require_monotone_b(B, tols);

    const std::vector<Vector> vertices = graph.domain_points();
    if (method == FStarMethod::Direct) return f_star_direct(vertices, B, y_star, tols, nullptr);
    return f_star_infconv(vertices, B, y_star, tols);
}

DualityGapReport duality_gap_report(const ExtensionInstance& instance, int num_samples,
                                    std::uint64_t seed) {
    instance.validate();
    const OperatorGraph shifted = translate(instance.graph, instance.w_star);
    const Tolerances& tols = instance.tolerances;
    const LinearOperator& B = instance.B;
    const std::vector<Vector> domain = instance.graph.domain_points();

    DualityGapReport rep;
    rep.seed = seed;

    // Dual side: -min phi via the extension solver run to optimality.
    const ExtensionResult sol = solve_extension(instance, /*to_optimality=*/true, 0, seed);
    rep.dual_value = -sol.phi_value;
    rep.dual_iterations = sol.iterations;
    for (const auto& wmsg : sol.warnings) rep.warnings.push_back(wmsg);

    // Primal side: inf over dom F* of F*(x*, x) + f*(B^T x - x*), evaluated
    // on the translated graph through piece weights: for lambda in the piece
    // simplex the point (x*, x) = sum lambda (slopes) has
    // F*(x*, x) <= sum lambda_k (-c_k), with equality at the LP optimum.
    const AffinePieceSet pieces = enumerate_pieces(shifted, instance.n);
    const int k = static_cast<int>(pieces.pieces.size());
    const int d = shifted.dimension;
    std::vector<Vector> piece_arg(k);       // B^T a_k - b_k per piece
    Vector piece_cost(k);
    for (int j = 0; j < k; ++j) {
        piece_arg[j] = B.apply_adjoint(pieces.pieces[j].slope_xstar);
        for (int r = 0; r < d; ++r) piece_arg[j][r] -= pieces.pieces[j].slope_x[r];
        piece_cost[j] = -pieces.pieces[j].intercept;
    }
    std::vector<Vector> unit(k, Vector(k, 0.0));
    for (int j = 0; j < k; ++j) unit[j][j] = 1.0;

    auto primal_oracle = [&](const Vector& lam, Vector& grad) {
        Vector v(d, 0.0);
        double cost = 0.0;
        for (int j = 0; j < k; ++j) {
            vec_axpy(lam[j], piece_arg[j], v);
            cost += lam[j] * piece_cost[j];
        }
        Vector xhat;
        const double fstar = f_star_direct(domain, B, v, tols, &xhat);
        for (int j = 0; j < k; ++j) grad[j] = piece_cost[j] + pairing(piece_arg[j], xhat);
        return cost + fstar;
    };
    const KelleyResult primal =
        kelley_minimize(unit, primal_oracle, 0.5 * tols.opt_tol, std::max(400, tols.max_iter));
    rep.primal_value = primal.value;
    rep.primal_iterations = primal.iterations;
    rep.gap = std::fabs(rep.dual_value - rep.primal_value);

    // Pointwise audit of F*(x*, x) + f*(B^T x - x*) >= 0 over sampled points
    // of co D(S) x R^d with finite F* (sampled through dom F* itself).
    SampleRng rng(seed);
    rep.pointwise_min = kInf;
    rep.pointwise_samples = num_samples;
    for (int s = 0; s < num_samples; ++s) {
        const Vector lam = rng.dirichlet(k);
        Vector x_star(d, 0.0), x(d, 0.0);
        for (int j = 0; j < k; ++j) {
            vec_axpy(lam[j], pieces.pieces[j].slope_x, x_star);
            vec_axpy(lam[j], pieces.pieces[j].slope_xstar, x);
        }
        const ConjugateValue cv = eval_conjugate(pieces, x_star, x, tols);
        if (!cv.finite) continue;
        Vector arg = B.apply_adjoint(x);
        for (int r = 0; r < d; ++r) arg[r] -= x_star[r];
        const double sum = cv.value + f_star_direct(domain, B, arg, tols, nullptr);
        rep.pointwise_min = std::min(rep.pointwise_min, sum);
        if (sum < -tols.feas_tol) ++rep.pointwise_violations;
    }
    if (rep.pointwise_samples == 0) rep.pointwise_min = 0.0;
    return rep;
}

}  // namespace cyclomon
