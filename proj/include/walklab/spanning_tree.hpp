#pragma once

#include <vector>

#include <Eigen/Core>

#include "walklab/conductance.hpp"
#include "walklab/graph.hpp"
#include "walklab/rational.hpp"
#include "walklab/union_find.hpp"

namespace walklab {

/// rho(e) = w(e)/r(e) and rho(v) = sum of rho over edges at v.
struct RhoProfile {
    EdgeFunction<double> edge_rho{EdgeRole::ratio, {}};
    Eigen::VectorXd vertex_rho;
};

/// Orientation of the good edges: arc u -> v exists iff edge (u,v) is good
/// for v, i.e. rho(u,v) <= rho(v) / (alpha d(v)). Both adjacency directions
/// are kept sorted by vertex index.
struct GoodGraph {
    std::vector<std::vector<Vertex>> in;  ///< in[v]: sources u of arcs u -> v
    std::vector<std::vector<Vertex>> out; ///< out[u]: targets v of arcs u -> v

    int in_degree(Vertex v) const { return static_cast<int>(in[v].size()); }
    bool has_arc(Vertex u, Vertex v) const;
    std::size_t num_arcs() const;
};

/// Spanning forest being grown into a tree. After the greedy step each tree
/// is a directed tree rooted at roots[i]; the size-requirement step merges
/// trees, tracked through `components` (keyed by degree, so each component
/// knows its size and maximum degree).
struct Forest {
    std::vector<Vertex> parent;  ///< greedy-step parent, -1 for roots
    std::vector<int> tree_of;    ///< index of the greedy tree holding v
    std::vector<Vertex> roots;   ///< roots in creation order
    std::vector<EdgeId> edges;   ///< every forest edge added so far
    DisjointSets components{0};
    double cost_step1 = 0.0;
    double cost_step2 = 0.0;

    int num_trees() const { return static_cast<int>(roots.size()); }
};

struct SpanningTreeResult {
    std::vector<EdgeId> edges; ///< sorted edge ids (canonical order)
    double cost_step1 = 0.0;
    double cost_step2 = 0.0;
    double cost_step3 = 0.0;
    double total_weight = 0.0;
    Rational alpha;
    double certified_bound = 0.0; ///< (4/alpha + 1/(1-alpha)) (n-1)
};

RhoProfile compute_rho(const Graph &graph, const EdgeFunction<double> &r, const EdgeFunction<double> &w);

GoodGraph build_good_graph(const Graph &graph, const RhoProfile &profile, Rational alpha);

/// Greedy directed forest: repeatedly root at the uncovered vertex of
/// largest rho(v) (ties to the smaller index) and take everything reachable
/// along good arcs through uncovered vertices, breadth first.
Forest greedy_forest(const Graph &graph, const GoodGraph &good, const RhoProfile &profile,
                     const EdgeFunction<double> &w, Rational alpha);

/// Merges trees (last-created first) until every component has at least
/// (1 - alpha) * d(v) vertices for each of its members v.
Forest enforce_size_requirement(Forest forest, const GoodGraph &good, const Graph &graph, const RhoProfile &profile,
                                const EdgeFunction<double> &w, Rational alpha);

/// Joins the remaining components with cheapest crossing edges.
SpanningTreeResult connect_forest(const Graph &graph, Forest forest, const EdgeFunction<double> &w,
                                  Rational alpha);

/// Full three-step construction. Requires w feasible w.r.t. r and
/// r(u,v) <= min(d(u), d(v)) on every edge; every cost certificate is
/// checked and a violation raises InvariantError.
SpanningTreeResult low_weight_spanning_tree(const Graph &graph, const EdgeFunction<double> &r,
                                            const EdgeFunction<double> &w, Rational alpha = {2, 3});

/// Kruskal minimum spanning tree, ties broken by edge id.
SpanningTreeResult mst(const Graph &graph, const EdgeFunction<double> &w);

/// True iff `edges` are n-1 distinct edge ids forming a spanning tree.
bool is_spanning_tree(const Graph &graph, const std::vector<EdgeId> &edges);

} // namespace walklab
