#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace walklab {

using Vertex = int;
using EdgeId = int;

/// Undirected edge in canonical form (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;

    Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Simple, connected, undirected graph. Edges are stored canonically
/// (smaller endpoint first, lexicographically sorted); adjacency is kept in
/// CSR form with neighbours sorted, each slot carrying the id of the edge it
/// came from. Instances are immutable and only produced by build_graph().
class Graph {
  public:
    Graph() = default;

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge &edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    /// Position of v's first slot in the CSR neighbour arrays.
    int offset(Vertex v) const { return offsets_[v]; }
    std::span<const int> degrees() const { return degrees_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
    }
    /// Edge ids aligned slot-for-slot with neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {incident_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
    }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

    bool is_tree() const { return num_edges() == n_ - 1; }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    friend Graph build_graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<Vertex> neighbors_;
    std::vector<EdgeId> incident_;
    std::vector<int> degrees_;
};

/// Validates and canonicalises an edge list. Throws GraphError naming the
/// offending item on self-loops, duplicates, out-of-range endpoints, or a
/// disconnected result.
Graph build_graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list);

/// Number of connected components of the subgraph (V, edges) on n vertices.
int count_components(int n, std::span<const Edge> edges);

} // namespace walklab
