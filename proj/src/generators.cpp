#include "walklab/generators.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "walklab/errors.hpp"
#include "walklab/random.hpp"
#include "walklab/union_find.hpp"

namespace walklab {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

[[noreturn]] void invalid(const std::string &what) {
    throw GraphError(GraphError::Kind::invalid_parameter, what);
}

void require(bool ok, const char *family, const char *constraint) {
    if (!ok) {
        invalid(detail::concat(family, ": parameter constraint violated: ", constraint));
    }
}

void add_clique(EdgeList &edges, Vertex first, int size) {
    for (Vertex i = first; i < first + size; ++i) {
        for (Vertex j = i + 1; j < first + size; ++j) {
            edges.emplace_back(i, j);
        }
    }
}

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::lollipop, "lollipop"},
    {Family::glitter_star, "glitter_star"},
    {Family::clique_star, "clique_star"},
    {Family::double_star, "double_star"},
    {Family::local_rule_adversary, "local_rule_adversary"},
    {Family::random_connected, "random_connected"},
}};

} // namespace

std::string_view family_name(Family f) {
    for (auto [family, name] : kFamilyNames) {
        if (family == f) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    std::string normalized(name);
    std::replace(normalized.begin(), normalized.end(), '-', '_');
    for (auto [family, known] : kFamilyNames) {
        if (known == normalized) {
            return family;
        }
    }
    return std::nullopt;
}

Graph path_graph(int n) {
    require(n >= 1, "path", "n >= 1");
    EdgeList edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return build_graph(n, std::move(edges));
}

Graph star_graph(int n) {
    require(n >= 1, "star", "n >= 1");
    EdgeList edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
    }
    return build_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle", "n >= 3");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return build_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete", "n >= 1");
    EdgeList edges;
    add_clique(edges, 0, n);
    return build_graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite", "a >= 1 and b >= 1");
    EdgeList edges;
    for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = 0; j < b; ++j) {
            edges.emplace_back(i, a + j);
        }
    }
    return build_graph(a + b, std::move(edges));
}

Graph lollipop_graph(int n) {
    require(n >= 3 && n % 3 == 0, "lollipop", "n >= 3 and n divisible by 3");
    const int clique = 2 * n / 3;
    EdgeList edges;
    add_clique(edges, 0, clique);
    for (Vertex v = clique - 1; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return build_graph(n, std::move(edges));
}

Graph glitter_star_graph(int spokes) {
    require(spokes >= 1, "glitter_star", "spokes >= 1");
    EdgeList edges;
    for (int i = 0; i < spokes; ++i) {
        edges.emplace_back(0, 2 * i + 1);
        edges.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return build_graph(2 * spokes + 1, std::move(edges));
}

Graph clique_star_graph(int n) {
    require(n >= 2 && n % 2 == 0, "clique_star", "n >= 2 and n even");
    const int half = n / 2;
    EdgeList edges;
    add_clique(edges, 0, half);
    for (Vertex i = 0; i < half; ++i) {
        edges.emplace_back(i, i + half);
    }
    return build_graph(n, std::move(edges));
}

Graph double_star_graph(int n) {
    require(n >= 2, "double_star", "n >= 2");
    const int leaves = n - 2;
    const int first = (leaves + 1) / 2;
    EdgeList edges{{0, 1}};
    for (int i = 0; i < leaves; ++i) {
        edges.emplace_back(i < first ? 0 : 1, 2 + i);
    }
    return build_graph(n, std::move(edges));
}

namespace {

struct Block {
    std::vector<Vertex> right;
};

// Perfect matching on the right-hand vertices (block order) such that the
// blocks end up connected. Tries the shifted pairing (2i+1, 2i+2) first and
// falls back to a spanning-tree-first realisation when the shift leaves the
// blocks split (it does when blocks have odd right-hand sizes).
EdgeList connecting_matching(const std::vector<Block> &blocks) {
    std::vector<Vertex> right;
    std::vector<int> owner;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        for (Vertex v : blocks[b].right) {
            right.push_back(v);
            owner.push_back(b);
        }
    }
    const int total = static_cast<int>(right.size());
    const int nblocks = static_cast<int>(blocks.size());

    EdgeList shifted;
    DisjointSets joined(nblocks);
    for (int i = 0; i < total / 2; ++i) {
        const int x = (2 * i + 1) % total;
        const int y = (2 * i + 2) % total;
        shifted.emplace_back(right[x], right[y]);
        joined.unite(owner[x], owner[y]);
    }
    if (joined.components() == 1) {
        return shifted;
    }

    if (total < 2 * (nblocks - 1)) {
        invalid(detail::concat("local_rule_adversary: ", nblocks, " blocks with ", total,
                               " right-hand vertices admit no connecting perfect matching"));
    }

    // Stubs still free per block, consumed front to back.
    std::vector<std::vector<Vertex>> spare(blocks.size());
    for (int b = 0; b < nblocks; ++b) {
        spare[b] = blocks[b].right;
        std::reverse(spare[b].begin(), spare[b].end());
    }
    auto take = [&](int b) {
        Vertex v = spare[b].back();
        spare[b].pop_back();
        return v;
    };

    std::vector<int> internal;
    std::vector<int> leaves;
    for (int b = 0; b < nblocks; ++b) {
        (blocks[b].right.size() >= 2 ? internal : leaves).push_back(b);
    }

    EdgeList matching;
    if (internal.empty()) {
        // Feasibility forces exactly two single-stub blocks here.
        matching.emplace_back(take(leaves[0]), take(leaves[1]));
    } else {
        for (std::size_t i = 0; i + 1 < internal.size(); ++i) {
            matching.emplace_back(take(internal[i]), take(internal[i + 1]));
        }
        std::size_t host = 0;
        for (int leaf : leaves) {
            while (spare[internal[host]].empty()) {
                ++host;
            }
            matching.emplace_back(take(internal[host]), take(leaf));
        }
    }
    std::vector<Vertex> rest;
    for (int b = 0; b < nblocks; ++b) {
        while (!spare[b].empty()) {
            rest.push_back(take(b));
        }
    }
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
        matching.emplace_back(rest[i], rest[i + 1]);
    }
    return matching;
}

} // namespace

AdversaryLayout local_rule_adversary_layout(int d1, int d2, int d3, int d4) {
    const char *name = "local_rule_adversary";
    require(d1 >= 1 && d2 >= 1, name, "d1 >= 1 and d2 >= 1");
    require(d3 >= 2, name, "d3 >= 2");
    require(d4 >= 2, name, "d4 >= 2");
    require(d1 <= d3, name, "d1 <= d3");
    require(d2 <= d4, name, "d2 <= d4");

    AdversaryLayout layout;
    const int right_per_copy = (d4 - 1) * d1 + (d3 - 1) * d2;
    layout.vertices_per_copy = 2 * (d3 - 1) * (d4 - 1) + right_per_copy;
    layout.copies = right_per_copy % 2 == 0 ? 1 : 2;

    EdgeList edges;
    std::vector<Block> blocks;
    std::vector<bool> is_type2_left;
    Vertex next = 0;
    auto add_block = [&](int left_count, int right_count, bool type2) {
        Block block;
        const Vertex left0 = next;
        next += left_count;
        for (int j = 0; j < right_count; ++j) {
            block.right.push_back(next + j);
        }
        for (int i = 0; i < left_count; ++i) {
            (type2 ? layout.type2 : layout.type1).push_back(left0 + i);
            for (Vertex r : block.right) {
                edges.emplace_back(left0 + i, r);
            }
        }
        next += right_count;
        blocks.push_back(std::move(block));
    };
    for (int copy = 0; copy < layout.copies; ++copy) {
        for (int i = 0; i < d4 - 1; ++i) {
            add_block(d3 - 1, d1, false);
        }
        for (int i = 0; i < d3 - 1; ++i) {
            add_block(d4 - 1, d2, true);
        }
    }
    EdgeList matching = connecting_matching(blocks);
    edges.insert(edges.end(), matching.begin(), matching.end());

    const int n = next;
    layout.graph = build_graph(n, std::move(edges));

    is_type2_left.assign(static_cast<std::size_t>(n), false);
    for (Vertex v : layout.type2) {
        is_type2_left[v] = true;
    }
    for (EdgeId e = 0; e < layout.graph.num_edges(); ++e) {
        const Edge &edge = layout.graph.edge(e);
        if (is_type2_left[edge.u] || is_type2_left[edge.v]) {
            layout.type2_edges.push_back(e);
        }
    }
    return layout;
}

Graph generate_local_rule_adversary(int d1, int d2, int d3, int d4) {
    return local_rule_adversary_layout(d1, d2, d3, d4).graph;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
    require(n >= 1, "random_connected", "n >= 1");
    require(p > 0.0 && p <= 1.0, "random_connected", "0 < p <= 1");
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                if (rng.uniform() < p) {
                    edges.push_back({i, j});
                }
            }
        }
        if (count_components(n, edges) == 1) {
            EdgeList list;
            list.reserve(edges.size());
            for (const Edge &e : edges) {
                list.emplace_back(e.u, e.v);
            }
            return build_graph(n, std::move(list));
        }
    }
    invalid(detail::concat("random_connected: no connected sample in ", kMaxAttempts,
                           " attempts (n=", n, ", p=", p, ")"));
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree", "n >= 1");
    if (n <= 2) {
        return path_graph(n);
    }
    Rng rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    std::vector<int> count(static_cast<std::size_t>(n), 1);
    for (int &c : code) {
        c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        ++count[c];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (count[v] == 1) {
            leaves.push(v);
        }
    }
    EdgeList edges;
    for (int c : code) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--count[c] == 1) {
            leaves.push(c);
        }
    }
    const int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return build_graph(n, std::move(edges));
}

Graph generate(const GraphFamily &f) {
    switch (f.family) {
    case Family::path:
        return path_graph(f.n);
    case Family::star:
        return star_graph(f.n);
    case Family::cycle:
        return cycle_graph(f.n);
    case Family::complete:
        return complete_graph(f.n);
    case Family::complete_bipartite:
        return complete_bipartite_graph(f.a, f.b);
    case Family::lollipop:
        return lollipop_graph(f.n);
    case Family::glitter_star:
        return glitter_star_graph(f.spokes);
    case Family::clique_star:
        return clique_star_graph(f.n);
    case Family::double_star:
        return double_star_graph(f.n);
    case Family::local_rule_adversary:
        if (f.degrees.size() != 4) {
            invalid("local_rule_adversary: expects exactly four degrees d1,d2,d3,d4");
        }
        return generate_local_rule_adversary(f.degrees[0], f.degrees[1], f.degrees[2], f.degrees[3]);
    case Family::random_connected:
        return random_connected_graph(f.n, f.edge_probability, f.seed);
    }
    invalid("unknown graph family");
}

} // namespace walklab
