#include "cyclomon/fitzpatrick.hpp"

#include <cmath>
#include <limits>

namespace cyclomon {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool chain_budget_ok(int m, int n, long long budget) {
    double total = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        total *= m;
        if (total > static_cast<double>(budget)) return false;
    }
    return true;
}

// Boundary term of a chain ending at j, written so the n = 2 value matches
// the classical formula term-for-term.
double boundary_term(const OperatorGraph& g, int j, const Vector& x) {
    return pairing(g.dual_point(j), x) - pairing(g.dual_point(j), g.point(j));
}

FitzEvaluation naive_eval(const OperatorGraph& g, const WeightMatrix& w, int n, const Vector& x,
                          const Vector& x_star) {
    const int m = g.size();
    const int len = n - 1;
    std::vector<int> chain(len, 0), best_chain(len, 0);
    double best = kNegInf;
    for (;;) {
        double sum = pairing(x_star, g.point(chain[0]));
        for (int t = 0; t + 1 < len; ++t) sum += w[chain[t]][chain[t + 1]];
        sum += boundary_term(g, chain[len - 1], x);
        if (sum > best) {
            best = sum;
            best_chain = chain;
        }
        int pos = len - 1;
        while (pos >= 0 && chain[pos] == m - 1) chain[pos--] = 0;
        if (pos < 0) break;
        ++chain[pos];
    }
    FitzEvaluation out;
    out.value = best;
    out.argmax_chain = best_chain;
    return out;
}

FitzEvaluation dp_eval(const OperatorGraph& g, const WeightMatrix& w, int n, const Vector& x,
                       const Vector& x_star) {
    const int m = g.size();
    const int len = n - 1;

    // Forward values give the reported maximum; v_1(i) = <x*, s_i>,
    // v_{t+1}(j) = max_i v_t(i) + W[i][j].
    Vector v(m), next(m);
    for (int i = 0; i < m; ++i) v[i] = pairing(x_star, g.point(i));
    for (int t = 1; t < len; ++t) {
        for (int j = 0; j < m; ++j) {
            double best = kNegInf;
            for (int i = 0; i < m; ++i) {
                const double cand = v[i] + w[i][j];
                if (cand > best) best = cand;
            }
            next[j] = best;
        }
        std::swap(v, next);
    }
    double value = kNegInf;
    for (int j = 0; j < m; ++j) {
        const double cand = v[j] + pairing(g.dual_point(j), x) - pairing(g.dual_point(j), g.point(j));
        if (cand > value) value = cand;
    }

    // Suffix values u_t(i) = best completion of a chain whose t-th entry is i;
    // greedy front-to-back argmax over them yields the lexicographically
    // smallest optimal chain.
    Matrix u(len, Vector(m));
    for (int i = 0; i < m; ++i) u[len - 1][i] = boundary_term(g, i, x);
    for (int t = len - 2; t >= 0; --t) {
        for (int i = 0; i < m; ++i) {
            double best = kNegInf;
            for (int j = 0; j < m; ++j) {
                const double cand = w[i][j] + u[t + 1][j];
                if (cand > best) best = cand;
            }
            u[t][i] = best;
        }
    }

    FitzEvaluation out;
    out.value = value;
    int cur = 0;
    double best0 = kNegInf;
    for (int i = 0; i < m; ++i) {
        const double cand = pairing(x_star, g.point(i)) + u[0][i];
        if (cand > best0) {
            best0 = cand;
            cur = i;
        }
    }
    out.argmax_chain.push_back(cur);
    for (int t = 1; t < len; ++t) {
        int pick = 0;
        double best = kNegInf;
        for (int j = 0; j < m; ++j) {
            const double cand = w[cur][j] + u[t][j];
            if (cand > best) {
                best = cand;
                pick = j;
            }
        }
        out.argmax_chain.push_back(pick);
        cur = pick;
    }
    return out;
}

}  // namespace

FitzEvaluation eval_fitz(const OperatorGraph& graph, int n, const Vector& x,
                         const Vector& x_star, FitzMethod method, long long budget) {
    graph.validate();
    if (n < 2) throw std::invalid_argument("eval_fitz: n must be at least 2");
    if (static_cast<int>(x.size()) != graph.dimension ||
        static_cast<int>(x_star.size()) != graph.dimension)
        throw DimensionMismatch("eval_fitz: query point does not match graph dimension");

    const WeightMatrix w = weight_matrix(graph);
    FitzEvaluation out;
    if (method == FitzMethod::Naive) {
        if (!chain_budget_ok(graph.size(), n, budget))
            throw BudgetExceeded("eval_fitz: m^(n-1) exceeds the chain budget; use dp");
        out = naive_eval(graph, w, n, x, x_star);
    } else {
        out = dp_eval(graph, w, n, x, x_star);
    }
    out.slope_x = graph.dual_point(out.argmax_chain.back());
    out.slope_xstar = graph.point(out.argmax_chain.front());
    return out;
}

bool candidate_test(const OperatorGraph& graph, int n, const Vector& x, const Vector& x_star,
                    const Tolerances& tols, std::vector<std::string>* warnings) {
    if (warnings) {
        const MonotonicityReport rep = is_n_monotone(graph, n, MonotonicityMethod::MaxPlus, tols);
        if (!rep.is_monotone)
            warnings->push_back("PreconditionWarning: graph is not " + std::to_string(n) +
                                "-monotone (worst cycle sum " + std::to_string(rep.worst_sum) +
                                "); the candidate test equivalence presumes it is");
    }
    const FitzEvaluation fe = eval_fitz(graph, n, x, x_star);
    return fe.value <= pairing(x_star, x) + tols.feas_tol;
}

OperatorGraph translate(const OperatorGraph& graph, const Vector& w_star) {
    graph.validate();
    if (static_cast<int>(w_star.size()) != graph.dimension)
        throw DimensionMismatch("translate: w_star does not match graph dimension");
    OperatorGraph out;
    out.dimension = graph.dimension;
    out.pairs.reserve(graph.pairs.size());
    for (const auto& p : graph.pairs) {
        GraphPair q;
        q.s = p.s;
        q.s_star.resize(p.s_star.size());
        for (std::size_t k = 0; k < p.s_star.size(); ++k) q.s_star[k] = p.s_star[k] - w_star[k];
        out.pairs.push_back(std::move(q));
    }
    return out;
}

}  // namespace cyclomon
