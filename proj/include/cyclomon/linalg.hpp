#pragma once

// Small dense helpers: vector arithmetic, a cyclic Jacobi eigensolver for
// symmetric matrices, and Euclidean projection onto the unit simplex.

#include "cyclomon/core.hpp"

namespace cyclomon {

Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(double t, const Vector& a);
void vec_axpy(double t, const Vector& a, Vector& y);  // y += t * a
double norm_inf(const Vector& a);
double norm2(const Vector& a);

struct SymmetricEigen {
    Vector values;    // ascending
    Matrix vectors;   // vectors[k] is the eigenvector for values[k]
};

/// Cyclic Jacobi rotations; A must be symmetric.
SymmetricEigen jacobi_eigensymmetric(Matrix a, int max_sweeps = 64);

double min_eigenvalue_symmetric(const Matrix& a);

/// Euclidean projection onto {x >= 0, sum x = 1}.
Vector project_simplex(Vector v);

}  // namespace cyclomon
