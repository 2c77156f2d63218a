#pragma once

// Reference computations used only by the tests. They share no solver code
// with the library: hitting times come from the fundamental matrix,
// resistances from the Laplacian pseudo-inverse, CYC from enumerating
// permutations of the raw hitting matrix.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "walklab/conductance.hpp"
#include "walklab/graph.hpp"

namespace oracle {

using walklab::EdgeFunction;
using walklab::EdgeId;
using walklab::Graph;
using walklab::Vertex;

inline Eigen::MatrixXd dense_laplacian(const Graph &g, const Eigen::VectorXd &c) {
    const int n = g.num_vertices();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edge(e);
        L(u, u) += c[e];
        L(v, v) += c[e];
        L(u, v) -= c[e];
        L(v, u) -= c[e];
    }
    return L;
}

inline Eigen::MatrixXd transition_matrix(const Graph &g, const Eigen::VectorXd &c) {
    const int n = g.num_vertices();
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edge(e);
        P(u, v) += c[e];
        P(v, u) += c[e];
    }
    for (int i = 0; i < n; ++i) {
        P.row(i) /= P.row(i).sum();
    }
    return P;
}

inline Eigen::VectorXd stationary(const Graph &g, const Eigen::VectorXd &c) {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        s[g.edge(e).u] += c[e];
        s[g.edge(e).v] += c[e];
    }
    return s / s.sum();
}

/// H[u,v] = (Z[v,v] - Z[u,v]) / pi(v) with Z = (I - P + 1 pi^T)^{-1}.
inline Eigen::MatrixXd hitting(const Graph &g, const Eigen::VectorXd &c) {
    const int n = g.num_vertices();
    const Eigen::MatrixXd P = transition_matrix(g, c);
    const Eigen::VectorXd pi = stationary(g, c);
    const Eigen::MatrixXd A =
        Eigen::MatrixXd::Identity(n, n) - P + Eigen::VectorXd::Ones(n) * pi.transpose();
    const Eigen::MatrixXd Z = A.fullPivLu().inverse();
    Eigen::MatrixXd H(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            H(u, v) = u == v ? 0.0 : (Z(v, v) - Z(u, v)) / pi[v];
        }
    }
    return H;
}

/// Expected return time to v: one step out, then the hitting time back.
inline double return_time_first_step(const Graph &g, const Eigen::VectorXd &c, const Eigen::MatrixXd &H, Vertex v) {
    const Eigen::MatrixXd P = transition_matrix(g, c);
    double t = 1.0;
    for (int u = 0; u < g.num_vertices(); ++u) {
        t += P(v, u) * H(u, v);
    }
    return t;
}

/// L^+ = (L + J/n)^{-1} - J/n.
inline Eigen::MatrixXd laplacian_pinv(const Graph &g, const Eigen::VectorXd &c) {
    const int n = g.num_vertices();
    const Eigen::MatrixXd J = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    return (dense_laplacian(g, c) + J).inverse() - J;
}

inline double resistance(const Eigen::MatrixXd &pinv, Vertex u, Vertex v) {
    return pinv(u, u) + pinv(v, v) - 2.0 * pinv(u, v);
}

/// Minimum over cyclic orders of the hitting-time sum, by enumerating the
/// (n-1)! orders that start at vertex 0.
inline double brute_force_cyc(const Eigen::MatrixXd &H) {
    const int n = static_cast<int>(H.rows());
    if (n == 1) {
        return 0.0;
    }
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    double best = INFINITY;
    do {
        double sum = H(0, rest.front()) + H(rest.back(), 0);
        for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
            sum += H(rest[i], rest[i + 1]);
        }
        best = std::min(best, sum);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

inline double cycle_sum(const Eigen::MatrixXd &H, const std::vector<Vertex> &order) {
    double sum = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        sum += H(order[i], order[(i + 1) % order.size()]);
    }
    return sum;
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// with probability p. Kept separate from the library generators.
inline Graph tree_plus_gnp(std::mt19937_64 &rng, int n, double p) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    for (int i = 1; i < n; ++i) {
        const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        const int a = std::min(label[i], label[j]);
        const int b = std::max(label[i], label[j]);
        used[a][b] = true;
        edges.emplace_back(a, b);
    }
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!used[a][b] && coin(rng)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return walklab::build_graph(n, std::move(edges));
}

/// Graph on n vertices with a density drawn to cover trees, sparse and dense cases.
inline Graph random_shaped_graph(std::mt19937_64 &rng, int n) {
    const double shape = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double p = 0.0;
    if (shape < 0.15) {
        p = 0.0;
    } else if (shape < 0.7) {
        p = std::min(1.0, std::uniform_real_distribution<double>(0.5, 4.0)(rng) / n);
    } else {
        p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    }
    return tree_plus_gnp(rng, n, p);
}

inline Graph random_graph(std::mt19937_64 &rng, int n_min, int n_max) {
    return random_shaped_graph(rng, std::uniform_int_distribution<int>(n_min, n_max)(rng));
}

inline Eigen::VectorXd random_conductance(std::mt19937_64 &rng, const Graph &g, double lo = 0.05, double hi = 5.0) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    Eigen::VectorXd c(g.num_edges());
    for (auto &x : c) {
        x = std::exp(u(rng));
    }
    return c;
}

inline EdgeFunction<double> conductance(Eigen::VectorXd c) { return {walklab::EdgeRole::conductance, std::move(c)}; }

} // namespace oracle
