#include "cyclomon/kelley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclomon/linalg.hpp"
#include "cyclomon/simplex.hpp"

namespace cyclomon {

void KelleyMaster::add_cut(double alpha, Vector beta) {
    alphas_.push_back(alpha);
    betas_.push_back(std::move(beta));
}

bool KelleyMaster::solve(Vector& lambda, double& t) const {
    const int k = num_cuts();
    const int m = m_;
    // Variables: [lambda (m), t+, t-, slack per cut]; rows: one per cut plus
    // the simplex constraint.  Cut j:  beta_j.lambda - t + slack_j = -alpha_j.
    const int ncols = m + 2 + k;
    Matrix a(k + 1, Vector(ncols, 0.0));
    Vector b(k + 1, 0.0), c(ncols, 0.0);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < m; ++i) a[j][i] = betas_[j][i];
        a[j][m] = -1.0;
        a[j][m + 1] = 1.0;
        a[j][m + 2 + j] = 1.0;
        b[j] = -alphas_[j];
    }
    for (int i = 0; i < m; ++i) a[k][i] = 1.0;
    b[k] = 1.0;
    c[m] = 1.0;
    c[m + 1] = -1.0;

    const LinearProgramResult res = solve_simplex(a, b, c, 1e-9);
    if (res.status != LinearProgramResult::Status::Optimal) return false;
    lambda.assign(res.x.begin(), res.x.begin() + m);
    t = res.x[m] - res.x[m + 1];
    return true;
}

KelleyResult kelley_minimize(const std::vector<Vector>& vertices,
                             const std::function<double(const Vector&, Vector&)>& oracle,
                             double gap_tol, int max_iter,
                             const std::function<bool(double, const Vector&)>& stop_early) {
    const int m = static_cast<int>(vertices.size());
    const int d = static_cast<int>(vertices.front().size());

    auto combine = [&](const Vector& lam) {
        Vector x(d, 0.0);
        for (int i = 0; i < m; ++i) vec_axpy(lam[i], vertices[i], x);
        return x;
    };

    KelleyMaster master(m);
    KelleyResult out;
    Vector lambda(m, 1.0 / m);
    out.lower_bound = -std::numeric_limits<double>::infinity();
    out.value = std::numeric_limits<double>::infinity();

    Vector grad(d);
    for (int iter = 0; iter < max_iter; ++iter) {
        const Vector x = combine(lambda);
        const double val = oracle(x, grad);
        ++out.iterations;
        if (val < out.value) {
            out.value = val;
            out.x = x;
            out.lambda = lambda;
        }
        out.trace.push_back(out.value);
        if (stop_early && stop_early(out.value, out.x)) return out;

        // Cut: f(y) >= val + grad.(y - x), expressed over lambda.
        const double alpha = val - pairing(grad, x);
        Vector beta(m);
        for (int i = 0; i < m; ++i) beta[i] = pairing(grad, vertices[i]);
        master.add_cut(alpha, std::move(beta));

        double t = 0.0;
        if (master.solve(lambda, t)) {
            out.lower_bound = std::max(out.lower_bound, t);
            if (out.value - out.lower_bound <= gap_tol) {
                out.converged = true;
                return out;
            }
        } else {
            // Degenerate master: fall back to a projected subgradient step.
            out.used_fallback = true;
            Vector glam(m);
            for (int i = 0; i < m; ++i) glam[i] = pairing(grad, vertices[i]);
            const double step = 1.0 / std::sqrt(static_cast<double>(iter + 1));
            Vector next = out.lambda.empty() ? lambda : out.lambda;
            const double gn = norm2(glam) + 1e-12;
            for (int i = 0; i < m; ++i) next[i] -= step * glam[i] / gn;
            lambda = project_simplex(std::move(next));
        }
    }
    return out;
}

}  // namespace cyclomon
