#include "cyclomon/core.hpp"

#include <cmath>

namespace cyclomon {

double pairing(const Vector& x_star, const Vector& x) {
    if (x_star.size() != x.size())
        throw DimensionMismatch("pairing: vectors of length " + std::to_string(x_star.size()) +
                                " and " + std::to_string(x.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x_star[i] * x[i];
    return acc;
}

bool all_finite(const Vector& v) {
    for (double e : v)
        if (!std::isfinite(e)) return false;
    return true;
}

std::vector<Vector> OperatorGraph::domain_points() const {
    std::vector<Vector> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(p.s);
    return out;
}

std::vector<Vector> OperatorGraph::range_points() const {
    std::vector<Vector> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(p.s_star);
    return out;
}

void OperatorGraph::validate() const {
    if (dimension <= 0) throw DimensionMismatch("graph: dimension must be positive");
    if (pairs.empty()) throw DimensionMismatch("graph: must contain at least one pair");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (static_cast<int>(p.s.size()) != dimension ||
            static_cast<int>(p.s_star.size()) != dimension)
            throw DimensionMismatch("graph: pair " + std::to_string(i) +
                                    " does not match dimension " + std::to_string(dimension));
        if (!all_finite(p.s) || !all_finite(p.s_star))
            throw DimensionMismatch("graph: pair " + std::to_string(i) +
                                    " contains a non-finite entry");
    }
}

OperatorGraph OperatorGraph::deduplicated(std::vector<std::string>* warnings) const {
    OperatorGraph out;
    out.dimension = dimension;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool dup = false;
        for (const auto& kept : out.pairs) {
            if (kept.s == pairs[i].s && kept.s_star == pairs[i].s_star) {
                dup = true;
                break;
            }
        }
        if (dup) {
            if (warnings)
                warnings->push_back("duplicate graph pair at index " + std::to_string(i) +
                                    " removed; suprema are unaffected");
        } else {
            out.pairs.push_back(pairs[i]);
        }
    }
    return out;
}

LinearOperator LinearOperator::zero(int d) {
    LinearOperator b;
    b.entries.assign(d, Vector(d, 0.0));
    return b;
}

LinearOperator LinearOperator::identity(int d) {
    LinearOperator b = zero(d);
    for (int i = 0; i < d; ++i) b.entries[i][i] = 1.0;
    return b;
}

bool LinearOperator::is_zero() const {
    for (const auto& row : entries)
        for (double e : row)
            if (e != 0.0) return false;
    return true;
}

Vector LinearOperator::apply(const Vector& x) const {
    const int d = dim();
    if (static_cast<int>(x.size()) != d)
        throw DimensionMismatch("LinearOperator::apply: size mismatch");
    Vector y(d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) y[i] += entries[i][j] * x[j];
    return y;
}

Vector LinearOperator::apply_adjoint(const Vector& x) const {
    const int d = dim();
    if (static_cast<int>(x.size()) != d)
        throw DimensionMismatch("LinearOperator::apply_adjoint: size mismatch");
    Vector y(d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) y[i] += entries[j][i] * x[j];
    return y;
}

Matrix LinearOperator::symmetric_sum() const {
    const int d = dim();
    Matrix q(d, Vector(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) q[i][j] = entries[i][j] + entries[j][i];
    return q;
}

void LinearOperator::validate(int d) const {
    if (dim() != d) throw DimensionMismatch("B: expected " + std::to_string(d) + " rows");
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != d)
            throw DimensionMismatch("B: expected square " + std::to_string(d) + "x" +
                                    std::to_string(d) + " matrix");
        if (!all_finite(row)) throw DimensionMismatch("B: contains a non-finite entry");
    }
}

void Tolerances::validate() const {
    if (!(feas_tol > 0) || !(num_tol > 0) || !(opt_tol > 0))
        throw std::invalid_argument("tolerances: all tolerances must be positive");
    if (max_iter <= 0) throw std::invalid_argument("tolerances: max_iter must be positive");
}

void ExtensionInstance::validate() const {
    graph.validate();
    if (n < 2) throw std::invalid_argument("instance: n must be at least 2");
    B.validate(graph.dimension);
    if (static_cast<int>(w_star.size()) != graph.dimension)
        throw DimensionMismatch("instance: w_star does not match dimension");
    if (!all_finite(w_star)) throw DimensionMismatch("instance: w_star has a non-finite entry");
    tolerances.validate();
}

WeightMatrix weight_matrix(const OperatorGraph& graph) {
    graph.validate();
    const int m = graph.size();
    const int d = graph.dimension;
    WeightMatrix w(m, Vector(m, 0.0));
    Vector diff(d);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // s_j - s_i is the exact zero vector when i == j, so W[i][i] == 0 bitwise.
            for (int k = 0; k < d; ++k) diff[k] = graph.point(j)[k] - graph.point(i)[k];
            w[i][j] = pairing(graph.dual_point(i), diff);
        }
    }
    return w;
}

double cycle_sum(const WeightMatrix& w, const std::vector<int>& walk) {
    double acc = 0.0;
    const int k = static_cast<int>(walk.size());
    for (int t = 0; t < k; ++t) acc += w[walk[t]][walk[(t + 1) % k]];
    return acc;
}

double chain_sum(const WeightMatrix& w, const std::vector<int>& chain) {
    double acc = 0.0;
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) acc += w[chain[t]][chain[t + 1]];
    return acc;
}

}  // namespace cyclomon
