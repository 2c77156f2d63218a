#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "walklab/conductance.hpp"
#include "walklab/electrical.hpp"
#include "walklab/spanning_tree.hpp"

namespace walklab {

/// Bounds on the cyclic cover time of one chain.
struct CycBounds {
    double lower_pi = 0.0;        ///< (1/2) sum_v 1/pi(v)
    double lower_universal = 0.0; ///< n^2 / 2
    double upper_tree = 0.0;      ///< 2 sum(c) * sum_{e in T} R(e)
    std::vector<EdgeId> tree;     ///< spanning tree behind upper_tree
    bool tree_from_construction = false; ///< tree built by low_weight_spanning_tree on w = R
    /// [X, 10X/3] with X = (sum d)(sum 1/(d+1)); contains CYC for simple walks only.
    std::pair<double, double> cfs_interval{0.0, 0.0};
    double matthews_cover_upper = 0.0; ///< max H[u,v] * ln n
    std::optional<CyclicCover<double>> exact;
};

struct CycBoundsOptions {
    /// Tree for upper_tree. Without one, the low-weight construction is run on
    /// w = R when r is dominated by the smaller endpoint degree, otherwise
    /// the minimum spanning tree of R is used.
    std::optional<std::vector<EdgeId>> tree;
    int exact_limit = kDefaultExactCycLimit; ///< compute exact CYC when n <= this
    /// Assert upper_tree <= 18 n^2 when the tree comes from the construction.
    bool min_degree_rule = false;
};

CycBounds cyc_bounds(const Graph &graph, const EdgeFunction<double> &c, const ChainAnalysis<double> &analysis,
                     const CycBoundsOptions &options = {});

/// (sum_v d(v)) * (sum_v 1/(d(v)+1)).
double cfs_degree_product(const Graph &graph);

} // namespace walklab
