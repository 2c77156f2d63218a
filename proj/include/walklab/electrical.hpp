#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include "walklab/conductance.hpp"
#include "walklab/errors.hpp"
#include "walklab/graph.hpp"
#include "walklab/parallel.hpp"

namespace walklab {

/// Linear-solver policy shared by the electrical computations. Graphs with
/// at most `dense_limit` vertices use dense LU with partial pivoting; larger
/// ones use Jacobi-preconditioned conjugate gradients on the (symmetric)
/// grounded Laplacian.
struct SolverOptions {
    int dense_limit = 2000;
    double iterative_tolerance = 1e-10;
    double residual_limit = 1e-6;
    unsigned threads = 1;
};

namespace detail {

template <typename Scalar>
Eigen::SparseMatrix<Scalar> laplacian(const Graph &graph, const EdgeFunction<Scalar> &c, Vertex drop = -1) {
    const int n = graph.num_vertices();
    auto index = [drop](Vertex v) { return drop >= 0 && v > drop ? v - 1 : v; };
    std::vector<Eigen::Triplet<Scalar>> entries;
    entries.reserve(static_cast<std::size_t>(4 * graph.num_edges()));
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        const auto [u, v] = graph.edge(e);
        const Scalar w = c[e];
        if (u != drop) {
            entries.emplace_back(index(u), index(u), w);
        }
        if (v != drop) {
            entries.emplace_back(index(v), index(v), w);
        }
        if (u != drop && v != drop) {
            entries.emplace_back(index(u), index(v), -w);
            entries.emplace_back(index(v), index(u), -w);
        }
    }
    const int size = drop >= 0 ? n - 1 : n;
    Eigen::SparseMatrix<Scalar> L(size, size);
    L.setFromTriplets(entries.begin(), entries.end());
    return L;
}

/// Copy of m without row k and column k.
template <typename Derived>
auto drop_row_col(const Eigen::MatrixBase<Derived> &m, Eigen::Index k) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.rows();
    const Eigen::Index tail = n - 1 - k;
    MatrixX<Scalar> out(n - 1, n - 1);
    out.topLeftCorner(k, k) = m.topLeftCorner(k, k);
    out.topRightCorner(k, tail) = m.topRightCorner(k, tail);
    out.bottomLeftCorner(tail, k) = m.bottomLeftCorner(tail, k);
    out.bottomRightCorner(tail, tail) = m.bottomRightCorner(tail, tail);
    return out;
}

template <typename Derived>
auto drop_entry(const Eigen::MatrixBase<Derived> &v, Eigen::Index k) {
    using Scalar = typename Derived::Scalar;
    VectorX<Scalar> out(v.size() - 1);
    out.head(k) = v.head(k);
    out.tail(v.size() - 1 - k) = v.tail(v.size() - 1 - k);
    return out;
}

inline void require_walkable(const Graph &graph) {
    if (graph.num_vertices() < 2) {
        throw DataError("random-walk analysis needs at least two vertices");
    }
}

template <typename Scalar>
using SparseCG = Eigen::ConjugateGradient<Eigen::SparseMatrix<Scalar>, Eigen::Lower | Eigen::Upper,
                                          Eigen::DiagonalPreconditioner<Scalar>>;

template <typename Scalar>
struct GroundedSystem {
    Eigen::SparseMatrix<Scalar> reduced;
    SparseCG<Scalar> cg;
};

} // namespace detail

/// Effective resistances of a conductance network. Per-edge values are
/// always materialised; pairwise queries read the grounded Green's function
/// (dense mode) or run one CG solve each (iterative mode).
template <typename Scalar = double>
struct EffectiveResistance {
    EdgeFunction<Scalar> edge{EdgeRole::effective_resistance, {}};
    /// Inverse of the Laplacian grounded at the last vertex, padded back to
    /// n x n with a zero row and column. Empty in iterative mode.
    MatrixX<Scalar> green;
    std::shared_ptr<detail::GroundedSystem<Scalar>> iterative;
    double residual_limit = 1e-6;

    bool is_dense() const { return green.size() > 0; }

    Scalar operator()(Vertex u, Vertex v) const {
        if (u == v) {
            return Scalar(0);
        }
        if (is_dense()) {
            return green(u, u) + green(v, v) - Scalar(2) * green(u, v);
        }
        const Eigen::Index size = iterative->reduced.rows();
        VectorX<Scalar> rhs = VectorX<Scalar>::Zero(size);
        if (u < size) {
            rhs[u] += Scalar(1);
        }
        if (v < size) {
            rhs[v] -= Scalar(1);
        }
        VectorX<Scalar> x = iterative->cg.solve(rhs);
        WALKLAB_ENSURE(iterative->cg.info() == Eigen::Success, "CG failed for R(", u, ",", v, ")");
        const Scalar residual = (iterative->reduced * x - rhs).template lpNorm<Eigen::Infinity>();
        WALKLAB_ENSURE(residual <= residual_limit, "resistance solve residual ", residual);
        const Scalar xu = u < size ? x[u] : Scalar(0);
        const Scalar xv = v < size ? x[v] : Scalar(0);
        return xu - xv;
    }
};

/// R(u,v) = (e_u - e_v)^T L^+ (e_u - e_v), computed on the Laplacian
/// grounded at vertex n-1. Edge values are checked against 0 <= R(e) <= r(e)
/// and rounding excursions past those limits are clamped.
template <typename Scalar = double>
EffectiveResistance<Scalar> effective_resistances(const Graph &graph, const EdgeFunction<Scalar> &c,
                                                  const SolverOptions &options = {}) {
    detail::require_walkable(graph);
    const int n = graph.num_vertices();
    const Vertex ground = n - 1;
    EffectiveResistance<Scalar> out;
    out.residual_limit = options.residual_limit;
    out.edge.values.resize(graph.num_edges());

    if (n <= options.dense_limit) {
        const MatrixX<Scalar> reduced = MatrixX<Scalar>(detail::laplacian(graph, c, ground));
        Eigen::PartialPivLU<MatrixX<Scalar>> lu(reduced);
        MatrixX<Scalar> inverse = lu.solve(MatrixX<Scalar>::Identity(n - 1, n - 1));
        const Scalar residual =
            (reduced * inverse - MatrixX<Scalar>::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff();
        WALKLAB_ENSURE(residual <= options.residual_limit, "grounded Laplacian inverse residual ", residual);
        out.green = MatrixX<Scalar>::Zero(n, n);
        out.green.topLeftCorner(n - 1, n - 1) = inverse;
    } else {
        out.iterative = std::make_shared<detail::GroundedSystem<Scalar>>();
        out.iterative->reduced = detail::laplacian(graph, c, ground);
        out.iterative->cg.setTolerance(static_cast<Scalar>(options.iterative_tolerance));
        out.iterative->cg.compute(out.iterative->reduced);
    }

    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        const auto [u, v] = graph.edge(e);
        const Scalar r = Scalar(1) / c[e];
        Scalar R = out(u, v);
        WALKLAB_ENSURE(R >= -Scalar(options.residual_limit) * r && R <= r * (1 + Scalar(options.residual_limit)),
                       "effective resistance ", R, " of edge ", e, " outside [0, ", r, "]");
        out.edge.values[e] = std::clamp(R, Scalar(0), r);
    }
    return out;
}

template <typename Scalar = double>
struct HittingTimes {
    MatrixX<Scalar> hitting;     ///< H[u,v], zero diagonal
    VectorX<Scalar> return_time; ///< H[v,v] = 1/pi(v)
};

/// Hitting times one target at a time: for target v, H[.,v] solves
/// h(x) = 1 + sum_u P(x,u) h(u) with h(v) = 0.
template <typename Scalar = double>
HittingTimes<Scalar> hitting_times(const Graph &graph, const EdgeFunction<Scalar> &c,
                                   const SolverOptions &options = {}) {
    detail::require_walkable(graph);
    const int n = graph.num_vertices();
    const VectorX<Scalar> strength = vertex_conductance(graph, c);
    HittingTimes<Scalar> out;
    out.return_time = stationary_distribution(graph, c).cwiseInverse();
    out.hitting = MatrixX<Scalar>::Zero(n, n);

    auto store = [&](Vertex target, const VectorX<Scalar> &h) {
        out.hitting.col(target).head(target) = h.head(target);
        out.hitting.col(target).tail(n - 1 - target) = h.tail(n - 1 - target);
    };

    if (n <= options.dense_limit) {
        // I - P with P(x,u) = c(x,u) / strength(x).
        MatrixX<Scalar> step = MatrixX<Scalar>::Identity(n, n);
        for (EdgeId e = 0; e < graph.num_edges(); ++e) {
            const auto [u, v] = graph.edge(e);
            step(u, v) -= c[e] / strength[u];
            step(v, u) -= c[e] / strength[v];
        }
        parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t i) {
            const auto target = static_cast<Vertex>(i);
            const MatrixX<Scalar> system = detail::drop_row_col(step, target);
            const VectorX<Scalar> ones = VectorX<Scalar>::Ones(n - 1);
            const VectorX<Scalar> h = Eigen::PartialPivLU<MatrixX<Scalar>>(system).solve(ones);
            const Scalar residual = (system * h - ones).template lpNorm<Eigen::Infinity>();
            WALKLAB_ENSURE(residual <= options.residual_limit, "hitting-time residual ", residual,
                           " for target ", target);
            store(target, h);
        });
    } else {
        // Multiplying the first-step system by diag(strength) gives the
        // grounded Laplacian system L_v h = strength_{-v}, which is SPD.
        parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t i) {
            const auto target = static_cast<Vertex>(i);
            const Eigen::SparseMatrix<Scalar> system = detail::laplacian(graph, c, target);
            const VectorX<Scalar> rhs = detail::drop_entry(strength, target);
            detail::SparseCG<Scalar> cg;
            cg.setTolerance(static_cast<Scalar>(options.iterative_tolerance));
            cg.compute(system);
            const VectorX<Scalar> h = cg.solve(rhs);
            WALKLAB_ENSURE(cg.info() == Eigen::Success, "CG failed for hitting target ", target);
            const Scalar residual = ((system * h - rhs).array() / rhs.array()).abs().maxCoeff();
            WALKLAB_ENSURE(residual <= options.residual_limit, "hitting-time residual ", residual,
                           " for target ", target);
            store(target, h);
        });
    }
    return out;
}

template <typename Derived>
auto commute_times(const Eigen::MatrixBase<Derived> &hitting) {
    return (hitting + hitting.transpose()).eval();
}

/// Everything the exact analysis knows about one (graph, conductance) pair.
template <typename Scalar = double>
struct ChainAnalysis {
    VectorX<Scalar> pi;
    Scalar total_conductance{};
    MatrixX<Scalar> hitting;
    VectorX<Scalar> return_time;
    MatrixX<Scalar> commute;
    EffectiveResistance<Scalar> resistance;

    int num_vertices() const { return static_cast<int>(pi.size()); }
};

template <typename Scalar = double>
ChainAnalysis<Scalar> analyze(const Graph &graph, const EdgeFunction<Scalar> &c, const SolverOptions &options = {}) {
    ChainAnalysis<Scalar> a;
    a.pi = stationary_distribution(graph, c);
    a.total_conductance = total_conductance(c);
    HittingTimes<Scalar> h = hitting_times(graph, c, options);
    a.hitting = std::move(h.hitting);
    a.return_time = std::move(h.return_time);
    a.commute = commute_times(a.hitting);
    a.resistance = effective_resistances(graph, c, options);
    return a;
}

/// max over u != v of |C[u,v] - 2 R(u,v) sum(c)| / C[u,v].
template <typename Scalar>
Scalar verify_commute_identity(const ChainAnalysis<Scalar> &analysis) {
    const int n = analysis.num_vertices();
    Scalar worst = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const Scalar C = analysis.commute(u, v);
            const Scalar predicted = Scalar(2) * analysis.resistance(u, v) * analysis.total_conductance;
            worst = std::max(worst, std::abs(C - predicted) / C);
        }
    }
    return worst;
}

/// sum_e R(e)/r(e), which equals n-1 on every connected network.
template <typename Scalar>
Scalar foster_sum(const EdgeFunction<Scalar> &resistance, const EdgeFunction<Scalar> &effective) {
    return (effective.values.array() / resistance.values.array()).sum();
}

template <typename Scalar>
Scalar foster_residual(int n, const EdgeFunction<Scalar> &resistance, const EdgeFunction<Scalar> &effective) {
    return std::abs(foster_sum(resistance, effective) - Scalar(n - 1));
}

template <typename Scalar>
Scalar foster_residual(const Graph &graph, const EdgeFunction<Scalar> &c, const SolverOptions &options = {}) {
    const EdgeFunction<Scalar> r{EdgeRole::resistance, c.values.cwiseInverse()};
    return foster_residual(graph.num_vertices(), r, effective_resistances(graph, c, options).edge);
}

/// Effective resistances repackaged as a weight function; feasible w.r.t.
/// r by Foster's identity and 0 <= R <= r.
template <typename Scalar>
EdgeFunction<Scalar> resistance_weights(const EffectiveResistance<Scalar> &R) {
    return {EdgeRole::weight, R.edge.values};
}

template <typename Scalar = double>
struct CyclicCover {
    Scalar value{};
    std::vector<Vertex> order;
};

inline constexpr int kDefaultExactCycLimit = 12;

/// Exact cyclic cover time: half the optimal closed tour over the commute
/// matrix, by Held-Karp subset dynamic programming in O(n^2 2^n).
template <typename Derived>
auto cyclic_cover_exact(const Eigen::MatrixBase<Derived> &commute, int max_n = kDefaultExactCycLimit) {
    using Scalar = typename Derived::Scalar;
    const int n = static_cast<int>(commute.rows());
    if (n > max_n) {
        throw DataError(detail::concat("exact cyclic cover time is limited to n <= ", max_n, " (got n=", n,
                                       "); use the bounds instead"));
    }
    CyclicCover<Scalar> out;
    if (n == 1) {
        out.order = {0};
        return out;
    }
    // Tour starts and ends at vertex 0; bit i of a mask stands for vertex i+1.
    const int k = n - 1;
    const std::size_t full = (std::size_t{1} << k) - 1;
    const Scalar inf = std::numeric_limits<Scalar>::infinity();
    std::vector<Scalar> cost((full + 1) * static_cast<std::size_t>(k), inf);
    std::vector<std::int8_t> prev((full + 1) * static_cast<std::size_t>(k), -1);
    auto at = [k](std::size_t mask, int j) { return mask * static_cast<std::size_t>(k) + static_cast<std::size_t>(j); };

    for (int j = 0; j < k; ++j) {
        cost[at(std::size_t{1} << j, j)] = commute(0, j + 1);
    }
    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (int j = 0; j < k; ++j) {
            const Scalar here = cost[at(mask, j)];
            if (!(mask >> j & 1) || here == inf) {
                continue;
            }
            for (int next = 0; next < k; ++next) {
                if (mask >> next & 1) {
                    continue;
                }
                const std::size_t grown = mask | (std::size_t{1} << next);
                const Scalar candidate = here + commute(j + 1, next + 1);
                if (candidate < cost[at(grown, next)]) {
                    cost[at(grown, next)] = candidate;
                    prev[at(grown, next)] = static_cast<std::int8_t>(j);
                }
            }
        }
    }
    Scalar best = inf;
    int last = 0;
    for (int j = 0; j < k; ++j) {
        const Scalar tour = cost[at(full, j)] + commute(j + 1, 0);
        if (tour < best) {
            best = tour;
            last = j;
        }
    }
    out.value = best / Scalar(2);
    std::vector<Vertex> reversed;
    for (std::size_t mask = full; last >= 0;) {
        reversed.push_back(last + 1);
        const int before = prev[at(mask, last)];
        mask &= ~(std::size_t{1} << last);
        last = before;
    }
    out.order.push_back(0);
    out.order.insert(out.order.end(), reversed.rbegin(), reversed.rend());
    return out;
}

template <typename Scalar>
CyclicCover<Scalar> cyclic_cover_exact(const ChainAnalysis<Scalar> &analysis, int max_n = kDefaultExactCycLimit) {
    return cyclic_cover_exact(analysis.commute, max_n);
}

} // namespace walklab
