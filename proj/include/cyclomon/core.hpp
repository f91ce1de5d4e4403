#pragma once

// Shared numeric types for finite operator graphs in R^d: the duality
// pairing, graph/operator containers, tolerances and the cycle-weight
// matrix W[i][j] = <s*_i, s_j - s_i>.

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclomon {

using Vector = std::vector<double>;
using Matrix = std::vector<std::vector<double>>;
using WeightMatrix = Matrix;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Duality pairing <x*, x>; in R^d the dot product.
double pairing(const Vector& x_star, const Vector& x);

bool all_finite(const Vector& v);

struct GraphPair {
    Vector s;
    Vector s_star;
};

/// Finite graph G(S) = {(s_i, s*_i)} of a set-valued operator S: R^d => R^d.
struct OperatorGraph {
    int dimension = 0;
    std::vector<GraphPair> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    const Vector& point(int i) const { return pairs[i].s; }
    const Vector& dual_point(int i) const { return pairs[i].s_star; }

    /// Domain points D(S) = {s_i} in graph order.
    std::vector<Vector> domain_points() const;
    /// Range points R(S) = {s*_i} in graph order.
    std::vector<Vector> range_points() const;

    /// Throws if empty, dimensions disagree, or entries are non-finite.
    void validate() const;

    /// Removes exact duplicate pairs, appending one warning per removal.
    OperatorGraph deduplicated(std::vector<std::string>* warnings = nullptr) const;
};

/// Dense d x d real map B; the adjoint is the transpose.
struct LinearOperator {
    Matrix entries;

    static LinearOperator zero(int d);
    static LinearOperator identity(int d);

    int dim() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;
    Vector apply(const Vector& x) const;          // B x
    Vector apply_adjoint(const Vector& x) const;  // B^T x
    Matrix symmetric_sum() const;                 // Q = B + B^T
    void validate(int d) const;
};

struct Tolerances {
    double feas_tol = 1e-7;
    double num_tol = 1e-9;
    double opt_tol = 1e-8;
    int max_iter = 500;

    void validate() const;
};

/// Problem statement for the extension solver and its hypothesis checks.
struct ExtensionInstance {
    OperatorGraph graph;
    int n = 2;
    LinearOperator B;
    Vector w_star;
    Tolerances tolerances;
    std::vector<std::string> warnings;  // normalization notes (e.g. dedup)

    void validate() const;
};

/// W[i][j] = <s*_i, s_j - s_i>; the diagonal is exactly zero.
WeightMatrix weight_matrix(const OperatorGraph& graph);

/// Sum of W entries along the closed walk (w_1, ..., w_k, w_1).
double cycle_sum(const WeightMatrix& w, const std::vector<int>& walk);

/// Sum of W entries along the open chain (c_1, ..., c_k).
double chain_sum(const WeightMatrix& w, const std::vector<int>& chain);

}  // namespace cyclomon
