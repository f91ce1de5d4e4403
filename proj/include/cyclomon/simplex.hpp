#pragma once

// Self-contained dense two-phase primal simplex with Bland's rule.
// Solves  min c.x  s.t.  A x = b,  x >= 0.

#include "cyclomon/core.hpp"

namespace cyclomon {

struct LinearProgramResult {
    enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };
    Status status = Status::IterationLimit;
    Vector x;                 // structural variables only
    double objective = 0.0;   // c.x at the returned point
    double residual = 0.0;    // phase-1 objective (sum of constraint violations)
    int iterations = 0;
};

/// feas_eps: phase-1 objective above this value means infeasible.
/// max_iter 0 picks a bound from the problem size.
LinearProgramResult solve_simplex(const Matrix& a, const Vector& b, const Vector& c,
                                  double feas_eps = 1e-8, int max_iter = 0);

}  // namespace cyclomon
