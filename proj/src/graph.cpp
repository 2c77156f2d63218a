#include "walklab/graph.hpp"

#include <algorithm>
#include <string>

#include "walklab/errors.hpp"
#include "walklab/union_find.hpp"

namespace walklab {

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
        return std::nullopt;
    }
    if (degree(a) > degree(b)) {
        std::swap(a, b);
    }
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) {
        return std::nullopt;
    }
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

int count_components(int n, std::span<const Edge> edges) {
    DisjointSets sets(n);
    for (const Edge &e : edges) {
        sets.unite(e.u, e.v);
    }
    return sets.components();
}

Graph build_graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list) {
    using Kind = GraphError::Kind;
    if (n < 1) {
        throw GraphError(Kind::empty, detail::concat("graph needs at least one vertex, got n=", n));
    }

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw GraphError(Kind::out_of_range,
                             detail::concat("edge [", a, ",", b, "] has an endpoint outside [0,", n, ")"));
        }
        if (a == b) {
            throw GraphError(Kind::self_loop, detail::concat("self-loop at vertex ", a));
        }
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw GraphError(Kind::duplicate_edge, detail::concat("duplicate edge [", dup->u, ",", dup->v, "]"));
    }

    if (int c = count_components(n, g.edges_); c != 1) {
        throw GraphError(Kind::disconnected, detail::concat("graph is disconnected (", c, " components)"));
    }

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge &e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    }
    g.neighbors_.resize(2 * g.edges_.size());
    g.incident_.resize(2 * g.edges_.size());
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Two passes over the sorted edge list: smaller neighbours first (in
    // ascending u), then larger ones (ascending v), so each row ends sorted.
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        const Edge &e = g.edges_[id];
        g.neighbors_[fill[e.v]] = e.u;
        g.incident_[fill[e.v]++] = id;
    }
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        const Edge &e = g.edges_[id];
        g.neighbors_[fill[e.u]] = e.v;
        g.incident_[fill[e.u]++] = id;
    }
    g.degrees_ = std::move(deg);
    return g;
}

} // namespace walklab
