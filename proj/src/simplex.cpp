#include "cyclomon/simplex.hpp"

#include <cmath>

namespace {
constexpr double kCostEps = 1e-9;   // reduced-cost threshold for entering columns
constexpr double kPivotEps = 1e-11; // smallest admissible pivot magnitude
}  // namespace

namespace cyclomon {

// Full-tableau implementation. Columns are [structural | artificial | rhs];
// Bland's rule (lowest eligible column in, lowest basic variable out on ratio
// ties) guarantees termination without anti-cycling perturbation.
LinearProgramResult solve_simplex(const Matrix& a, const Vector& b, const Vector& c,
                                  double feas_eps, int max_iter) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m)
        throw DimensionMismatch("solve_simplex: b does not match row count");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("solve_simplex: A row does not match c length");
    if (max_iter <= 0) max_iter = 200 + 60 * (m + n);

    const int rhs = n + m;  // rhs column index
    Matrix t(m, Vector(n + m + 1, 0.0));
    for (int i = 0; i < m; ++i) {
        const double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
        t[i][n + i] = 1.0;
        t[i][rhs] = sign * b[i];
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced-cost rows for both phases, updated through every pivot.
    Vector z1(n + m + 1, 0.0);  // phase 1: minimize sum of artificials
    Vector z2(n + m + 1, 0.0);  // phase 2: minimize c.x
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < m; ++i) col += t[i][j];
        z1[j] = -col;
        z2[j] = c[j];
    }
    LinearProgramResult res;

    auto pivot = [&](int r, int s) {
        const double inv = 1.0 / t[r][s];
        for (int j = 0; j <= rhs; ++j) t[r][j] *= inv;
        t[r][s] = 1.0;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][s] == 0.0) continue;
            const double f = t[i][s];
            for (int j = 0; j <= rhs; ++j) t[i][j] -= f * t[r][j];
            t[i][s] = 0.0;
        }
        const double f1 = z1[s], f2 = z2[s];
        if (f1 != 0.0)
            for (int j = 0; j <= rhs; ++j) z1[j] -= f1 * t[r][j];
        if (f2 != 0.0)
            for (int j = 0; j <= rhs; ++j) z2[j] -= f2 * t[r][j];
        z1[s] = 0.0;
        z2[s] = 0.0;
        basis[r] = s;
    };

    // Ratio test with Bland tie-breaking; returns -1 when the column is
    // nonpositive (unbounded direction).
    auto leaving_row = [&](int s) {
        int r = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i) {
            if (t[i][s] <= kPivotEps) continue;
            const double ratio = t[i][rhs] / t[i][s];
            if (r == -1 || ratio < best - 1e-15 ||
                (std::fabs(ratio - best) <= 1e-15 && basis[i] < basis[r])) {
                r = i;
                best = ratio;
            }
        }
        return r;
    };

    auto run_phase = [&](const Vector& z, int limit_cols) -> int {
        // limit_cols: artificials are never eligible to enter in phase 2.
        while (res.iterations < max_iter) {
            int s = -1;
            for (int j = 0; j < limit_cols; ++j) {
                if (z[j] < -kCostEps) {
                    s = j;
                    break;
                }
            }
            if (s == -1) return 0;  // optimal for this phase
            const int r = leaving_row(s);
            if (r == -1) return 1;  // unbounded
            pivot(r, s);
            ++res.iterations;
        }
        return 2;  // iteration limit
    };

    // Phase 1.
    int rc = run_phase(z1, n + m);
    double phase1 = 0.0;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n) phase1 += t[i][rhs];
    res.residual = phase1;
    if (rc == 2) {
        res.status = LinearProgramResult::Status::IterationLimit;
        return res;
    }
    if (phase1 > feas_eps) {
        res.status = LinearProgramResult::Status::Infeasible;
        return res;
    }

    // Drive (near-zero) artificials out of the basis where a structural
    // pivot exists; rows without one are redundant and stay put.
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        int s = -1;
        for (int j = 0; j < n; ++j) {
            if (std::fabs(t[i][j]) > kPivotEps) {
                s = j;
                break;
            }
        }
        if (s != -1) {
            pivot(i, s);
            ++res.iterations;
        }
    }

    // Phase 2.
    rc = run_phase(z2, n);
    if (rc == 1) {
        res.status = LinearProgramResult::Status::Unbounded;
        return res;
    }
    if (rc == 2) {
        res.status = LinearProgramResult::Status::IterationLimit;
        return res;
    }

    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][rhs];
    res.objective = 0.0;
    for (int j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    res.status = LinearProgramResult::Status::Optimal;
    return res;
}

}  // namespace cyclomon
