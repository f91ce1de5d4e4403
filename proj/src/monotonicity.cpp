#include "cyclomon/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclomon/linalg.hpp"

namespace cyclomon {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool walk_budget_ok(int m, int n, long long budget) {
    double total = 1.0;
    for (int i = 0; i < n; ++i) {
        total *= m;
        if (total > static_cast<double>(budget)) return false;
    }
    return true;
}

MonotonicityReport bruteforce_worst_walk(const WeightMatrix& w, int n) {
    const int m = static_cast<int>(w.size());
    std::vector<int> walk(n, 0), best_walk(n, 0);
    double best = kNegInf;
    // Lexicographic enumeration with strict improvement keeps the
    // lexicographically smallest argmax walk.
    for (;;) {
        double sum = 0.0;
        for (int t = 0; t < n; ++t) sum += w[walk[t]][walk[(t + 1) % n]];
        if (sum > best) {
            best = sum;
            best_walk = walk;
        }
        int pos = n - 1;
        while (pos >= 0 && walk[pos] == m - 1) walk[pos--] = 0;
        if (pos < 0) break;
        ++walk[pos];
    }
    MonotonicityReport rep;
    rep.worst_cycle = best_walk;
    rep.worst_sum = best;
    rep.method = "bruteforce";
    return rep;
}

// Max-plus powers P_e[i][j] = best weight of a walk i -> j with exactly e
// edges, e = 1..n; the lexicographically smallest argmax walk is rebuilt
// front-to-back from the powers.
MonotonicityReport maxplus_worst_walk(const WeightMatrix& w, int n) {
    const int m = static_cast<int>(w.size());
    std::vector<Matrix> pow(n + 1);
    pow[1] = w;
    for (int e = 2; e <= n; ++e) {
        pow[e].assign(m, Vector(m, kNegInf));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double best = kNegInf;
                for (int k = 0; k < m; ++k) {
                    const double cand = w[i][k] + pow[e - 1][k][j];
                    if (cand > best) best = cand;
                }
                pow[e][i][j] = best;
            }
        }
    }

    int start = 0;
    double best = pow[n][0][0];
    for (int a = 1; a < m; ++a) {
        if (pow[n][a][a] > best) {
            best = pow[n][a][a];
            start = a;
        }
    }

    std::vector<int> walk{start};
    for (int t = 1; t < n; ++t) {
        // Remaining edges after stepping to c: n - t back to start.
        const int rem = n - t;
        int choice = -1;
        double cbest = kNegInf;
        for (int c = 0; c < m; ++c) {
            const double tail = rem == 0 ? (c == start ? 0.0 : kNegInf) : pow[rem][c][start];
            const double cand = w[walk.back()][c] + tail;
            if (cand > cbest) {
                cbest = cand;
                choice = c;
            }
        }
        walk.push_back(choice);
    }

    MonotonicityReport rep;
    rep.worst_cycle = walk;
    rep.worst_sum = best;
    rep.method = "maxplus";
    return rep;
}

}  // namespace

MonotonicityReport is_n_monotone(const OperatorGraph& graph, int n, MonotonicityMethod method,
                                 const Tolerances& tols, long long budget) {
    graph.validate();
    if (n < 2) throw std::invalid_argument("is_n_monotone: n must be at least 2");
    const WeightMatrix w = weight_matrix(graph);
    const int m = graph.size();

    MonotonicityReport rep;
    if (method == MonotonicityMethod::Bruteforce) {
        if (!walk_budget_ok(m, n, budget))
            throw BudgetExceeded("is_n_monotone: m^n exceeds the walk budget; use maxplus");
        rep = bruteforce_worst_walk(w, n);
    } else {
        if (static_cast<double>(n) * m * m * m > 1e9)
            throw BudgetExceeded("is_n_monotone: n*m^3 too large for max-plus powers");
        rep = maxplus_worst_walk(w, n);
    }
    // Recompute along the reported walk so the certificate reproduces
    // worst_sum exactly.
    rep.worst_sum = cycle_sum(w, rep.worst_cycle);
    rep.n = n;
    rep.is_monotone = rep.worst_sum <= tols.feas_tol;
    return rep;
}

namespace {

// Worst simple cycle via the max-plus diagonal scan over lengths 2..m.
std::vector<int> worst_simple_cycle(const WeightMatrix& w) {
    const int m = static_cast<int>(w.size());
    std::vector<int> best;
    double best_sum = 0.0;
    for (int k = 2; k <= m; ++k) {
        MonotonicityReport cand = maxplus_worst_walk(w, k);
        const double sum = cycle_sum(w, cand.worst_cycle);
        if (best.empty() || sum > best_sum) {
            best_sum = sum;
            best = cand.worst_cycle;
        }
    }
    return best;
}

}  // namespace

MonotonicityReport is_cyclically_monotone(const OperatorGraph& graph, const Tolerances& tols) {
    graph.validate();
    const WeightMatrix w = weight_matrix(graph);
    const int m = graph.size();

    // Longest-path relaxation from a virtual source (all distances 0);
    // any relaxation after m-1 rounds witnesses a positive cycle.
    Vector dist(m, 0.0);
    std::vector<int> pred(m, -1);
    auto relax_round = [&]() {
        int updated = -1;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (dist[i] + w[i][j] > dist[j]) {
                    dist[j] = dist[i] + w[i][j];
                    pred[j] = i;
                    updated = j;
                }
            }
        }
        return updated;
    };
    for (int round = 0; round < m - 1; ++round)
        if (relax_round() == -1) break;

    MonotonicityReport rep;
    rep.n = 0;
    rep.method = "bellman-ford";

    // Detection round; the certificate comes from predecessor walking. Any
    // cycle in the predecessor graph has strictly positive weight.
    std::vector<int> cycle;
    const int updated = relax_round();
    if (updated != -1) {
        int v = updated;
        for (int step = 0; step < m && v != -1; ++step) v = pred[v];
        if (v != -1) {
            std::vector<char> seen(m, 0);
            int u = v;
            while (u != -1 && !seen[u]) {
                seen[u] = 1;
                u = pred[u];
            }
            if (u != -1) {
                int c = u;
                do {
                    cycle.push_back(c);
                    c = pred[c];
                } while (c != u);
                std::reverse(cycle.begin(), cycle.end());
            }
        }
        // The walk can die at an unset predecessor (all-zero source
        // initialization) or land on a cycle within tolerance while a worse
        // one exists; the diagonal scan then supplies the worst simple cycle.
        if (cycle.empty() || cycle_sum(w, cycle) <= tols.feas_tol)
            cycle = worst_simple_cycle(w);
        const auto lowest = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), lowest, cycle.end());
    }

    if (cycle.empty()) {
        rep.worst_cycle = {0};  // constant walk, sum exactly 0
        rep.worst_sum = 0.0;
        rep.is_monotone = true;
    } else {
        rep.worst_cycle = cycle;
        rep.worst_sum = cycle_sum(w, cycle);
        rep.is_monotone = rep.worst_sum <= tols.feas_tol;
    }
    return rep;
}

double MaxAffineFunction::value(const Vector& x) const {
    double best = kNegInf;
    for (const auto& p : pieces) best = std::max(best, pairing(p.slope, x) + p.intercept);
    return best;
}

int MaxAffineFunction::active_piece(const Vector& x) const {
    int arg = 0;
    double best = kNegInf;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const double v = pairing(pieces[k].slope, x) + pieces[k].intercept;
        if (v > best) {
            best = v;
            arg = static_cast<int>(k);
        }
    }
    return arg;
}

MaxAffineFunction rockafellar_potential(const OperatorGraph& graph, int base_index,
                                        const Tolerances& tols) {
    graph.validate();
    const int m = graph.size();
    if (base_index < 0 || base_index >= m)
        throw std::invalid_argument("rockafellar_potential: base_index out of range");

    const MonotonicityReport cyc = is_cyclically_monotone(graph, tols);
    if (!cyc.is_monotone) throw NotCyclicallyMonotone(cyc.worst_cycle, cyc.worst_sum);

    // Longest-path potentials from the base over the dense weight graph.
    const WeightMatrix w = weight_matrix(graph);
    Vector pi(m, kNegInf);
    pi[base_index] = 0.0;
    for (int round = 0; round < m - 1; ++round) {
        bool changed = false;
        for (int i = 0; i < m; ++i) {
            if (pi[i] == kNegInf) continue;
            for (int j = 0; j < m; ++j) {
                if (pi[i] + w[i][j] > pi[j]) {
                    pi[j] = pi[i] + w[i][j];
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }

    MaxAffineFunction f;
    f.pieces.reserve(m);
    for (int j = 0; j < m; ++j) {
        MaxAffinePiece p;
        p.slope = graph.dual_point(j);
        p.intercept = pi[j] - pairing(graph.dual_point(j), graph.point(j));
        f.pieces.push_back(std::move(p));
    }
    return f;
}

bool verify_potential(const OperatorGraph& graph, const MaxAffineFunction& f,
                      const std::vector<Vector>& samples, const Tolerances& tols) {
    for (const auto& y : samples) {
        const double fy = f.value(y);
        for (int j = 0; j < graph.size(); ++j) {
            const double bound = f.value(graph.point(j)) +
                                 pairing(graph.dual_point(j), vec_sub(y, graph.point(j)));
            if (fy < bound - tols.feas_tol) return false;
        }
    }
    return true;
}

}  // namespace cyclomon
