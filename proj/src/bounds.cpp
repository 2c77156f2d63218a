#include "walklab/bounds.hpp"

#include <cmath>

namespace walklab {

double cfs_degree_product(const Graph &graph) {
    double degree_sum = 0.0;
    double inverse_sum = 0.0;
    for (int d : graph.degrees()) {
        degree_sum += d;
        inverse_sum += 1.0 / (d + 1.0);
    }
    return degree_sum * inverse_sum;
}

CycBounds cyc_bounds(const Graph &graph, const EdgeFunction<double> &c, const ChainAnalysis<double> &analysis,
                     const CycBoundsOptions &options) {
    const int n = graph.num_vertices();
    CycBounds b;
    b.lower_pi = 0.5 * analysis.pi.cwiseInverse().sum();
    b.lower_universal = 0.5 * n * n;

    const EdgeFunction<double> &R = analysis.resistance.edge;
    if (options.tree) {
        if (!is_spanning_tree(graph, *options.tree)) {
            throw DataError("supplied edge set is not a spanning tree of the graph");
        }
        b.tree = *options.tree;
    } else {
        const EdgeFunction<double> r{EdgeRole::resistance, c.values.cwiseInverse()};
        bool dominated = true;
        for (EdgeId e = 0; e < graph.num_edges(); ++e) {
            const int dmin = std::min(graph.degree(graph.edge(e).u), graph.degree(graph.edge(e).v));
            dominated = dominated && r[e] <= dmin * (1.0 + kFeasibleRangeTolerance);
        }
        if (dominated) {
            b.tree = low_weight_spanning_tree(graph, r, resistance_weights(analysis.resistance)).edges;
            b.tree_from_construction = true;
        } else {
            b.tree = mst(graph, R).edges;
        }
    }
    double tree_resistance = 0.0;
    for (EdgeId e : b.tree) {
        tree_resistance += R[e];
    }
    b.upper_tree = 2.0 * analysis.total_conductance * tree_resistance;
    if (options.min_degree_rule && b.tree_from_construction) {
        WALKLAB_ENSURE(b.upper_tree <= 18.0 * n * n, "tree certificate ", b.upper_tree, " exceeds 18 n^2");
    }

    const double x = cfs_degree_product(graph);
    b.cfs_interval = {x, 10.0 / 3.0 * x};
    b.matthews_cover_upper = analysis.hitting.maxCoeff() * std::log(static_cast<double>(n));

    constexpr double kSlack = 1e-9;
    WALKLAB_ENSURE(b.lower_universal <= b.lower_pi * (1 + kSlack), "n^2/2 = ", b.lower_universal,
                   " exceeds (1/2) sum 1/pi = ", b.lower_pi);
    if (n <= options.exact_limit) {
        b.exact = cyclic_cover_exact(analysis, options.exact_limit);
        WALKLAB_ENSURE(b.lower_pi <= b.exact->value * (1 + kSlack), "lower bound ", b.lower_pi,
                       " exceeds exact CYC ", b.exact->value);
        WALKLAB_ENSURE(b.exact->value <= b.upper_tree * (1 + kSlack), "exact CYC ", b.exact->value,
                       " exceeds tree bound ", b.upper_tree);
    }
    return b;
}

} // namespace walklab
