#pragma once

// Kelley cutting-plane machinery over a vertex-listed polytope: the master
// problem  min t  s.t.  t >= alpha_j + beta_j . lambda,  lambda in the unit
// simplex, solved with the internal simplex, plus a generic driver with a
// projected-subgradient fallback for degenerate masters.

#include <functional>

#include "cyclomon/core.hpp"

namespace cyclomon {

class KelleyMaster {
public:
    explicit KelleyMaster(int num_vertices) : m_(num_vertices) {}

    void add_cut(double alpha, Vector beta);
    int num_cuts() const { return static_cast<int>(alphas_.size()); }

    /// Solves the master; false when the LP stalls or degenerates.
    bool solve(Vector& lambda, double& t) const;

private:
    int m_;
    std::vector<double> alphas_;
    std::vector<Vector> betas_;
};

struct KelleyResult {
    Vector x;
    Vector lambda;
    double value = 0.0;
    double lower_bound = 0.0;
    int iterations = 0;
    bool converged = false;
    bool used_fallback = false;
    std::vector<double> trace;  // best value after each iteration
};

/// Minimizes a convex function over conv(vertices). The oracle returns the
/// value at x and fills the subgradient. stop_early (optional) may end the
/// loop once the incumbent is good enough.
KelleyResult kelley_minimize(const std::vector<Vector>& vertices,
                             const std::function<double(const Vector&, Vector&)>& oracle,
                             double gap_tol, int max_iter,
                             const std::function<bool(double, const Vector&)>& stop_early = {});

}  // namespace cyclomon
