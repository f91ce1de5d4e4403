#pragma once

// Shared fixtures: the standard desk graphs and seeded random generators for
// monotone and cyclically monotone graph populations.

#include <cstdint>

#include "cyclomon/core.hpp"
#include "cyclomon/sampling.hpp"

namespace cyclotest {

using cyclomon::GraphPair;
using cyclomon::LinearOperator;
using cyclomon::Matrix;
using cyclomon::OperatorGraph;
using cyclomon::SampleRng;
using cyclomon::Vector;

// G1 = {(0,0),(1,1)} in R^1: subgradients of x^2/2-ish, cyclically monotone.
inline OperatorGraph g1() {
    OperatorGraph g;
    g.dimension = 1;
    g.pairs = {{{0.0}, {0.0}}, {{1.0}, {1.0}}};
    return g;
}

// G2 = {(0,1),(1,0)} in R^1: not monotone.
inline OperatorGraph g2() {
    OperatorGraph g;
    g.dimension = 1;
    g.pairs = {{{0.0}, {1.0}}, {{1.0}, {0.0}}};
    return g;
}

// G4: three points of the quarter-turn rotation on the unit circle in R^2;
// 2-monotone but not 3-monotone.
inline OperatorGraph g4() {
    OperatorGraph g;
    g.dimension = 2;
    g.pairs = {{{1.0, 0.0}, {0.0, 1.0}}, {{0.0, 1.0}, {-1.0, 0.0}}, {{-1.0, 0.0}, {0.0, -1.0}}};
    return g;
}

inline OperatorGraph single_point(Vector s, Vector s_star) {
    OperatorGraph g;
    g.dimension = static_cast<int>(s.size());
    g.pairs = {{std::move(s), std::move(s_star)}};
    return g;
}

/// Arbitrary graph: no monotonicity structure.
inline OperatorGraph random_graph(SampleRng& rng, int m, int d, double scale = 2.0) {
    OperatorGraph g;
    g.dimension = d;
    for (int i = 0; i < m; ++i) {
        GraphPair p;
        for (int k = 0; k < d; ++k) p.s.push_back(rng.uniform(-scale, scale));
        for (int k = 0; k < d; ++k) p.s_star.push_back(rng.uniform(-scale, scale));
        g.pairs.push_back(std::move(p));
    }
    return g;
}

/// Random linear map with positive-definite symmetric part.
inline LinearOperator random_strongly_monotone_operator(SampleRng& rng, int d) {
    LinearOperator b = LinearOperator::zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b.entries[i][j] = rng.uniform(-1.0, 1.0);
    // Diagonal dominance of the symmetric part forces B + B^T > 0.
    for (int i = 0; i < d; ++i) b.entries[i][i] += 1.5 + static_cast<double>(d);
    return b;
}

/// Samples of a monotone linear map: 2-monotone by construction (not
/// necessarily cyclically monotone when the skew part is nonzero).
inline OperatorGraph random_two_monotone_graph(SampleRng& rng, int m, int d) {
    LinearOperator lin = LinearOperator::zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const double skew = rng.uniform(-1.0, 1.0);
            lin.entries[i][j] += skew;
            lin.entries[j][i] -= skew;
        }
    for (int i = 0; i < d; ++i) lin.entries[i][i] += rng.uniform(0.1, 2.0);
    OperatorGraph g;
    g.dimension = d;
    for (int p = 0; p < m; ++p) {
        Vector s(d);
        for (int k = 0; k < d; ++k) s[k] = rng.uniform(-2.0, 2.0);
        g.pairs.push_back({s, lin.apply(s)});
    }
    return g;
}

/// Subgradient samples of a random max-affine convex function: cyclically
/// monotone by construction.
inline OperatorGraph random_cyclically_monotone_graph(SampleRng& rng, int m, int d,
                                                      int num_affine_pieces = 4) {
    std::vector<Vector> slopes(num_affine_pieces, Vector(d));
    Vector offsets(num_affine_pieces);
    for (int k = 0; k < num_affine_pieces; ++k) {
        for (int r = 0; r < d; ++r) slopes[k][r] = rng.uniform(-2.0, 2.0);
        offsets[k] = rng.uniform(-1.0, 1.0);
    }
    OperatorGraph g;
    g.dimension = d;
    for (int p = 0; p < m; ++p) {
        Vector x(d);
        for (int r = 0; r < d; ++r) x[r] = rng.uniform(-2.0, 2.0);
        int arg = 0;
        double best = -1e300;
        for (int k = 0; k < num_affine_pieces; ++k) {
            const double v = cyclomon::pairing(slopes[k], x) + offsets[k];
            if (v > best) {
                best = v;
                arg = k;
            }
        }
        g.pairs.push_back({x, slopes[arg]});
    }
    return g;
}

inline Vector random_vector(SampleRng& rng, int d, double scale = 2.0) {
    Vector v(d);
    for (int r = 0; r < d; ++r) v[r] = rng.uniform(-scale, scale);
    return v;
}

}  // namespace cyclotest
