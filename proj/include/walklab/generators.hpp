#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

enum class Family {
    path,
    star,
    cycle,
    complete,
    complete_bipartite,
    lollipop,
    glitter_star,
    clique_star,
    double_star,
    local_rule_adversary,
    random_connected,
};

/// Family identifier plus its integer parameters. Which fields are read
/// depends on the family:
///   path, star, cycle, complete, lollipop, clique_star, double_star: n
///   complete_bipartite: a, b
///   glitter_star: spokes (n = 2*spokes + 1)
///   local_rule_adversary: degrees = {d1, d2, d3, d4}
///   random_connected: n, edge_probability, seed
struct GraphFamily {
    Family family = Family::path;
    int n = 0;
    int a = 0;
    int b = 0;
    int spokes = 0;
    std::vector<int> degrees;
    double edge_probability = 0.0;
    std::uint64_t seed = 0;
};

std::string_view family_name(Family f);
/// Accepts the names printed by family_name(), with '-' or '_' separators.
std::optional<Family> parse_family(std::string_view name);

Graph generate(const GraphFamily &family);

Graph path_graph(int n);
Graph star_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

/// Clique on vertices [0, 2n/3) and a path of n/3 further vertices hanging
/// off the highest-index clique vertex. Requires n divisible by 3, n >= 3.
Graph lollipop_graph(int n);

/// Centre 0 with `spokes` paths of length two: spoke i is 0 - (2i+1) - (2i+2).
Graph glitter_star_graph(int spokes);

/// Clique on [0, n/2), independent set [n/2, n), matching i <-> i + n/2.
Graph clique_star_graph(int n);

/// Centres 0 and 1 joined by an edge; the n-2 leaves are split with the
/// larger half (ceil) on centre 0.
Graph double_star_graph(int n);

/// Layout of the lower-bound family for non-min-degree local rules. Vertex
/// roles are recorded so callers can rescale the type-2 edges.
struct AdversaryLayout {
    Graph graph;
    int copies = 1;                  ///< 2 when the right-hand side had odd size
    int vertices_per_copy = 0;       ///< 2(d3-1)(d4-1) + (d4-1)d1 + (d3-1)d2
    std::vector<Vertex> type1;       ///< left vertices of degree d1
    std::vector<Vertex> type2;       ///< left vertices of degree d2
    std::vector<EdgeId> type2_edges; ///< edges incident to a type-2 vertex
};

/// (d4-1) copies of K_{d3-1,d1} and (d3-1) copies of K_{d4-1,d2}, right-hand
/// sides joined by a perfect matching chosen to make the graph connected.
AdversaryLayout local_rule_adversary_layout(int d1, int d2, int d3, int d4);
Graph generate_local_rule_adversary(int d1, int d2, int d3, int d4);

/// G(n, p) sampling repeated until the sample is connected, at most 1000
/// attempts. Deterministic in (n, p, seed).
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// Uniform random labelled tree (Pruefer sequence), deterministic in seed.
Graph random_tree(int n, std::uint64_t seed);

} // namespace walklab
