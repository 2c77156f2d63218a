#include "walklab/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "walklab/errors.hpp"

namespace walklab {
namespace {

constexpr double kCertificateSlack = 1e-9;

bool within(double value, double bound) {
    return value <= bound + kCertificateSlack * std::max(1.0, std::abs(bound));
}

void require_alpha(Rational alpha) {
    if (!(alpha.num > 0 && alpha.num < alpha.den)) {
        throw DataError(detail::concat("alpha must lie strictly between 0 and 1, got ", alpha.str()));
    }
}

// q * size >= (q - p) * degree, i.e. size >= (1 - alpha) * degree.
bool meets_size(std::int64_t size, std::int64_t degree, Rational alpha) {
    return alpha.den * size >= (alpha.den - alpha.num) * degree;
}

EdgeId edge_between(const Graph &graph, Vertex u, Vertex v) {
    auto e = graph.find_edge(u, v);
    WALKLAB_ENSURE(e.has_value(), "arc ", u, "->", v, " has no underlying edge");
    return *e;
}

} // namespace

bool GoodGraph::has_arc(Vertex u, Vertex v) const {
    return std::binary_search(in[v].begin(), in[v].end(), u);
}

std::size_t GoodGraph::num_arcs() const {
    std::size_t total = 0;
    for (const auto &sources : in) {
        total += sources.size();
    }
    return total;
}

RhoProfile compute_rho(const Graph &graph, const EdgeFunction<double> &r, const EdgeFunction<double> &w) {
    const FeasibilityReport report = check_feasible(graph, r, w);
    if (!report.feasible) {
        throw DataError(detail::concat("weight function is not feasible: ", report.range_violations.size(),
                                       " range violations, |sum w/r - (n-1)| = ", report.sum_residual));
    }
    RhoProfile profile;
    // Clamp the range slack accepted above so 0 <= rho(e) <= 1 exactly.
    profile.edge_rho.values = (w.values.array() / r.values.array()).cwiseMax(0.0).cwiseMin(1.0).matrix();
    profile.vertex_rho = Eigen::VectorXd::Zero(graph.num_vertices());
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        profile.vertex_rho[graph.edge(e).u] += profile.edge_rho[e];
        profile.vertex_rho[graph.edge(e).v] += profile.edge_rho[e];
    }
    const double n1 = graph.num_vertices() - 1;
    WALKLAB_ENSURE(std::abs(profile.edge_rho.values.sum() - n1) <= kFeasibleSumTolerance,
                   "edge rho sums to ", profile.edge_rho.values.sum());
    WALKLAB_ENSURE(std::abs(profile.vertex_rho.sum() - 2 * n1) <= 2 * kFeasibleSumTolerance,
                   "vertex rho sums to ", profile.vertex_rho.sum());
    return profile;
}

GoodGraph build_good_graph(const Graph &graph, const RhoProfile &profile, Rational alpha) {
    require_alpha(alpha);
    const int n = graph.num_vertices();
    const double p = static_cast<double>(alpha.num);
    const double q = static_cast<double>(alpha.den);
    GoodGraph good;
    good.in.resize(static_cast<std::size_t>(n));
    good.out.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const double d = graph.degree(v);
        // rho(u,v) <= (1/alpha) rho(v)/d(v)  <=>  p d(v) rho(u,v) <= q rho(v); ties are good.
        const double threshold = q * profile.vertex_rho[v];
        const double slack = 1e-12 * std::max(1.0, threshold);
        auto nb = graph.neighbors(v);
        auto ids = graph.incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (p * d * profile.edge_rho[ids[i]] <= threshold + slack) {
                good.in[v].push_back(nb[i]);
            }
        }
        WALKLAB_ENSURE(meets_size(good.in_degree(v), graph.degree(v), alpha), "vertex ", v, " has in-degree ",
                       good.in_degree(v), " below (1-alpha) d(v) with d(v) = ", graph.degree(v));
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : good.in[v]) {
            good.out[u].push_back(v);
        }
    }
    return good;
}

Forest greedy_forest(const Graph &graph, const GoodGraph &good, const RhoProfile &profile,
                     const EdgeFunction<double> &w, Rational alpha) {
    require_alpha(alpha);
    const int n = graph.num_vertices();
    const double inv_alpha = 1.0 / alpha.value();

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return profile.vertex_rho[a] > profile.vertex_rho[b]; });

    Forest forest;
    forest.parent.assign(static_cast<std::size_t>(n), -1);
    forest.tree_of.assign(static_cast<std::size_t>(n), -1);
    forest.components = DisjointSets(std::vector<int>(graph.degrees().begin(), graph.degrees().end()));

    double non_root_rho = 0.0;
    std::queue<Vertex> frontier;
    for (Vertex root : order) {
        if (forest.tree_of[root] >= 0) {
            continue;
        }
        const int tree = forest.num_trees();
        forest.roots.push_back(root);
        forest.tree_of[root] = tree;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex x = frontier.front();
            frontier.pop();
            for (Vertex y : good.out[x]) {
                if (forest.tree_of[y] >= 0) {
                    continue;
                }
                forest.tree_of[y] = tree;
                forest.parent[y] = x;
                const EdgeId e = edge_between(graph, x, y);
                WALKLAB_ENSURE(within(w[e], inv_alpha * profile.vertex_rho[y]), "good arc ", x, "->", y,
                               " has weight ", w[e], " above rho(v)/alpha");
                forest.edges.push_back(e);
                forest.components.unite(x, y);
                forest.cost_step1 += w[e];
                non_root_rho += profile.vertex_rho[y];
                frontier.push(y);
            }
        }
    }

    // No good arc may lead from an earlier tree into a later one.
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : good.in[v]) {
            WALKLAB_ENSURE(forest.tree_of[u] >= forest.tree_of[v], "arc ", u, "->", v, " runs from tree ",
                           forest.tree_of[u], " to later tree ", forest.tree_of[v]);
        }
    }
    WALKLAB_ENSURE(within(forest.cost_step1, inv_alpha * non_root_rho), "greedy forest cost ", forest.cost_step1,
                   " exceeds sum over non-roots of rho(v)/alpha = ", inv_alpha * non_root_rho);
    return forest;
}

Forest enforce_size_requirement(Forest forest, const GoodGraph &good, const Graph &graph, const RhoProfile &profile,
                                const EdgeFunction<double> &w, Rational alpha) {
    require_alpha(alpha);
    const int n = graph.num_vertices();
    const int k = forest.num_trees();
    const double two_over_alpha = 2.0 / alpha.value();

    // Highest-degree vertex of each greedy tree, ties to the smaller index.
    std::vector<Vertex> heaviest(static_cast<std::size_t>(k), -1);
    for (Vertex v = 0; v < n; ++v) {
        Vertex &h = heaviest[forest.tree_of[v]];
        if (h < 0 || graph.degree(v) > graph.degree(h)) {
            h = v;
        }
    }

    double root_rho = 0.0;
    for (int m = k - 2; m >= 0; --m) {
        const Vertex v = heaviest[m];
        const int dv = graph.degree(v);
        const Vertex root = forest.roots[m];
        root_rho += profile.vertex_rho[root];
        if (meets_size(forest.components.size(v), dv, alpha)) {
            continue;
        }
        WALKLAB_ENSURE(profile.vertex_rho[v] <= profile.vertex_rho[root], "tree ", m, " holds vertex ", v,
                       " with rho above its root's");

        auto add = [&](Vertex u) {
            const EdgeId e = edge_between(graph, u, v);
            forest.edges.push_back(e);
            forest.components.unite(u, v);
            return w[e];
        };

        double added = 0.0;
        Vertex single = -1;
        for (Vertex u : good.in[v]) {
            if (graph.degree(u) >= dv && !forest.components.same(u, v) &&
                (single < 0 || graph.degree(u) > graph.degree(single))) {
                single = u;
            }
        }
        if (single >= 0) {
            added = add(single);
        } else {
            for (Vertex u : good.in[v]) {
                if (meets_size(forest.components.size(v), dv, alpha)) {
                    break;
                }
                if (!forest.components.same(u, v)) {
                    added += add(u);
                }
            }
        }
        WALKLAB_ENSURE(meets_size(forest.components.size(v), dv, alpha), "ran out of good in-arcs at vertex ", v,
                       " before reaching the size requirement");
        WALKLAB_ENSURE(within(added, two_over_alpha * profile.vertex_rho[v]), "tree ", m, " merge cost ", added,
                       " exceeds 2 rho(v)/alpha = ", two_over_alpha * profile.vertex_rho[v]);
        forest.cost_step2 += added;
    }
    if (k >= 1) {
        // The last tree is charged nothing but its root still counts in the bound.
        root_rho += profile.vertex_rho[forest.roots[k - 1]];
    }
    WALKLAB_ENSURE(within(forest.cost_step2, two_over_alpha * root_rho), "size-requirement cost ",
                   forest.cost_step2, " exceeds 2/alpha sum over roots = ", two_over_alpha * root_rho);

    for (Vertex v = 0; v < n; ++v) {
        WALKLAB_ENSURE(meets_size(forest.components.size(v), forest.components.max_key(v), alpha),
                       "component of vertex ", v, " has ", forest.components.size(v),
                       " vertices but maximum degree ", forest.components.max_key(v));
    }
    return forest;
}

SpanningTreeResult connect_forest(const Graph &graph, Forest forest, const EdgeFunction<double> &w, Rational alpha) {
    require_alpha(alpha);
    const int n = graph.num_vertices();
    std::vector<EdgeId> order(static_cast<std::size_t>(graph.num_edges()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return w[a] < w[b]; });

    SpanningTreeResult result;
    result.alpha = alpha;
    result.cost_step1 = forest.cost_step1;
    result.cost_step2 = forest.cost_step2;
    for (EdgeId e : order) {
        if (forest.components.components() == 1) {
            break;
        }
        if (forest.components.unite(graph.edge(e).u, graph.edge(e).v)) {
            forest.edges.push_back(e);
            result.cost_step3 += w[e];
        }
    }
    const double step3_bound = static_cast<double>(alpha.den) / static_cast<double>(alpha.den - alpha.num) * (n - 1);
    WALKLAB_ENSURE(within(result.cost_step3, step3_bound), "connecting cost ", result.cost_step3,
                   " exceeds (n-1)/(1-alpha) = ", step3_bound);

    result.edges = std::move(forest.edges);
    std::sort(result.edges.begin(), result.edges.end());
    WALKLAB_ENSURE(is_spanning_tree(graph, result.edges), "construction did not produce a spanning tree");
    for (EdgeId e : result.edges) {
        result.total_weight += w[e];
    }
    const double inv_alpha = static_cast<double>(alpha.den) / static_cast<double>(alpha.num);
    result.certified_bound = (4.0 * inv_alpha + static_cast<double>(alpha.den) / (alpha.den - alpha.num)) * (n - 1);
    WALKLAB_ENSURE(within(result.total_weight, result.certified_bound), "tree weight ", result.total_weight,
                   " exceeds certified bound ", result.certified_bound);
    return result;
}

SpanningTreeResult low_weight_spanning_tree(const Graph &graph, const EdgeFunction<double> &r,
                                            const EdgeFunction<double> &w, Rational alpha) {
    require_alpha(alpha);
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        const int dmin = std::min(graph.degree(graph.edge(e).u), graph.degree(graph.edge(e).v));
        if (r[e] > dmin * (1.0 + kFeasibleRangeTolerance)) {
            throw DataError(detail::concat("resistance ", r[e], " of edge ", e,
                                           " exceeds the smaller endpoint degree ", dmin));
        }
    }
    const RhoProfile profile = compute_rho(graph, r, w);
    const GoodGraph good = build_good_graph(graph, profile, alpha);
    Forest forest = greedy_forest(graph, good, profile, w, alpha);
    forest = enforce_size_requirement(std::move(forest), good, graph, profile, w, alpha);
    return connect_forest(graph, std::move(forest), w, alpha);
}

SpanningTreeResult mst(const Graph &graph, const EdgeFunction<double> &w) {
    std::vector<EdgeId> order(static_cast<std::size_t>(graph.num_edges()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return w[a] < w[b]; });
    DisjointSets sets(graph.num_vertices());
    SpanningTreeResult result;
    for (EdgeId e : order) {
        if (sets.unite(graph.edge(e).u, graph.edge(e).v)) {
            result.edges.push_back(e);
            result.total_weight += w[e];
        }
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

bool is_spanning_tree(const Graph &graph, const std::vector<EdgeId> &edges) {
    if (static_cast<int>(edges.size()) != graph.num_vertices() - 1) {
        return false;
    }
    DisjointSets sets(graph.num_vertices());
    for (EdgeId e : edges) {
        if (e < 0 || e >= graph.num_edges() || !sets.unite(graph.edge(e).u, graph.edge(e).v)) {
            return false;
        }
    }
    return sets.components() == 1;
}

} // namespace walklab
