#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support.hpp"
#include "walklab/errors.hpp"
#include "walklab/generators.hpp"
#include "walklab/union_find.hpp"

using namespace walklab;

namespace {

GraphError::Kind build_error(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
    try {
        build_graph(n, std::move(edges));
    } catch (const GraphError &e) {
        return e.kind();
    }
    FAIL("expected GraphError");
    return GraphError::Kind::empty;
}

std::vector<int> degree_list(const Graph &g) { return {g.degrees().begin(), g.degrees().end()}; }

void check_structure(const Graph &g) {
    int total = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const Edge &e = g.edge(g.incident_edges(v)[i]);
            CHECK(e.other(v) == nb[i]);
            CHECK(g.find_edge(v, nb[i]) == g.incident_edges(v)[i]);
        }
        total += g.degree(v);
    }
    CHECK(total == 2 * g.num_edges());
    CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
    for (const Edge &e : g.edges()) {
        CHECK(e.u < e.v);
    }
    CHECK(count_components(g.num_vertices(), g.edges()) == 1);
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("build_graph examples") {
    CHECK(degree_list(build_graph(2, {{0, 1}})) == std::vector<int>{1, 1});
    const Graph p3 = build_graph(3, {{1, 2}, {0, 1}});
    CHECK(degree_list(p3) == std::vector<int>{1, 2, 1});
    CHECK(p3.edge(0) == Edge{0, 1});
    CHECK(build_error(3, {{0, 1}}) == GraphError::Kind::disconnected);
}

TEST_CASE("build_graph canonicalises orientation and order") {
    const Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 0}});
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{2, 3});
    CHECK(g == build_graph(4, {{0, 1}, {0, 2}, {2, 3}}));
    CHECK_FALSE(g.find_edge(1, 3).has_value());
    CHECK(g.is_tree());
}

TEST_CASE("build_graph rejects bad input with distinct kinds") {
    CHECK(build_error(2, {{1, 1}, {0, 1}}) == GraphError::Kind::self_loop);
    CHECK(build_error(2, {{0, 1}, {1, 0}}) == GraphError::Kind::duplicate_edge);
    CHECK(build_error(2, {{0, 2}}) == GraphError::Kind::out_of_range);
    CHECK(build_error(2, {{-1, 1}}) == GraphError::Kind::out_of_range);
    CHECK(build_error(0, {}) == GraphError::Kind::empty);
    CHECK(build_error(4, {{0, 1}, {2, 3}}) == GraphError::Kind::disconnected);
    try {
        build_graph(3, {{0, 1}, {2, 2}});
    } catch (const GraphError &e) {
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
    CHECK_NOTHROW(build_graph(1, {}));
}

TEST_CASE("star, path, cycle, complete") {
    const Graph s = star_graph(4);
    CHECK(degree_list(s) == std::vector<int>{3, 1, 1, 1});
    CHECK(path_graph(5).num_edges() == 4);
    CHECK(cycle_graph(5).num_edges() == 5);
    CHECK(complete_graph(6).num_edges() == 15);
    CHECK(complete_bipartite_graph(2, 3).num_edges() == 6);
    CHECK_THROWS_AS(cycle_graph(2), GraphError);
}

TEST_CASE("glitter star with three spokes") {
    const Graph g = glitter_star_graph(3);
    CHECK(g.num_vertices() == 7);
    CHECK(g.degree(0) == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(g.degree(2 * i + 1) == 2);
        CHECK(g.degree(2 * i + 2) == 1);
    }
}

TEST_CASE("lollipop n=9") {
    const Graph g = lollipop_graph(9);
    CHECK(g.num_edges() == 18);
    for (Vertex a = 0; a < 6; ++a) {
        for (Vertex b = a + 1; b < 6; ++b) {
            CHECK(g.find_edge(a, b).has_value());
        }
    }
    // path hangs off the highest-index clique vertex
    CHECK(g.find_edge(5, 6).has_value());
    CHECK(g.find_edge(6, 7).has_value());
    CHECK(g.find_edge(7, 8).has_value());
    CHECK(g.degree(8) == 1);
    CHECK_THROWS_AS(lollipop_graph(10), GraphError);
}

TEST_CASE("clique star and double star") {
    const Graph cs = clique_star_graph(8);
    CHECK(cs.num_edges() == 6 + 4);
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(cs.degree(v) == 4);
        CHECK(cs.degree(v + 4) == 1);
    }
    CHECK_THROWS_AS(clique_star_graph(7), GraphError);

    const Graph ds = double_star_graph(9);
    CHECK(ds.find_edge(0, 1).has_value());
    CHECK(ds.degree(0) == 4 + 1); // ceil(7/2) leaves plus the other centre
    CHECK(ds.degree(1) == 3 + 1);
    CHECK(ds.is_tree());
}

TEST_CASE("generate dispatches by family and is deterministic") {
    GraphFamily f;
    f.family = Family::random_connected;
    f.n = 20;
    f.edge_probability = 0.2;
    f.seed = 11;
    const Graph a = generate(f);
    const Graph b = generate(f);
    CHECK(a == b);
    check_structure(a);
    f.seed = 12;
    CHECK_FALSE(generate(f) == a);

    f.family = Family::complete_bipartite;
    f.a = 2;
    f.b = 4;
    CHECK(generate(f).num_edges() == 8);

    CHECK(parse_family("glitter-star") == Family::glitter_star);
    CHECK(parse_family("glitter_star") == Family::glitter_star);
    CHECK_FALSE(parse_family("wheel").has_value());
    for (int i = 0; i <= static_cast<int>(Family::random_connected); ++i) {
        CHECK(parse_family(family_name(static_cast<Family>(i))) == static_cast<Family>(i));
    }
}

TEST_CASE("random trees") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_tree(2 + static_cast<int>(seed % 30), seed);
        CHECK(t.is_tree());
        check_structure(t);
        CHECK(t == random_tree(2 + static_cast<int>(seed % 30), seed));
    }
}

TEST_CASE("local rule adversary degree profile") {
    const auto check_profile = [](int d1, int d2, int d3, int d4) {
        const AdversaryLayout lay = local_rule_adversary_layout(d1, d2, d3, d4);
        const Graph &g = lay.graph;
        check_structure(g);
        const int count = (d3 - 1) * (d4 - 1) * lay.copies;
        CHECK(static_cast<int>(lay.type1.size()) == count);
        CHECK(static_cast<int>(lay.type2.size()) == count);
        for (Vertex v : lay.type1) {
            CHECK(g.degree(v) == d1);
            for (Vertex u : g.neighbors(v)) {
                CHECK(g.degree(u) == d3);
            }
        }
        for (Vertex v : lay.type2) {
            CHECK(g.degree(v) == d2);
            for (Vertex u : g.neighbors(v)) {
                CHECK(g.degree(u) == d4);
            }
        }
        CHECK(lay.vertices_per_copy == 2 * (d3 - 1) * (d4 - 1) + (d4 - 1) * d1 + (d3 - 1) * d2);
        CHECK(g.num_vertices() == lay.copies * lay.vertices_per_copy);
        CHECK(lay.vertices_per_copy <= 6 * (d3 - 1) * (d4 - 1));
        const std::set<Vertex> t2(lay.type2.begin(), lay.type2.end());
        for (EdgeId e : lay.type2_edges) {
            CHECK((t2.count(g.edge(e).u) + t2.count(g.edge(e).v)) == 1);
        }
        CHECK(static_cast<int>(lay.type2_edges.size()) == count * d2);
        return lay;
    };
    const AdversaryLayout a = check_profile(2, 2, 3, 3);
    CHECK(a.graph.num_vertices() == 16);
    CHECK(a.copies == 1);
    check_profile(1, 1, 2, 2);
    check_profile(2, 2, 5, 9);
    check_profile(3, 1, 4, 2);
    check_profile(1, 2, 3, 2);
    CHECK(generate_local_rule_adversary(2, 2, 3, 3) == a.graph);
}

TEST_CASE("local rule adversary preconditions") {
    CHECK_THROWS_AS(generate_local_rule_adversary(2, 2, 1, 3), GraphError);
    CHECK_THROWS_AS(generate_local_rule_adversary(4, 2, 3, 3), GraphError);
    CHECK_THROWS_AS(generate_local_rule_adversary(2, 4, 3, 3), GraphError);
    CHECK_THROWS_AS(generate_local_rule_adversary(0, 1, 2, 2), GraphError);
    // every block has a single right-hand vertex, so no perfect matching connects them
    CHECK_THROWS_AS(generate_local_rule_adversary(1, 1, 2, 3), GraphError);
}

TEST_CASE("every generator output is a valid graph") {
    for (int n : {3, 6, 9, 12, 30}) {
        check_structure(path_graph(n));
        check_structure(star_graph(n));
        check_structure(cycle_graph(n));
        check_structure(complete_graph(n));
        check_structure(lollipop_graph(n));
        check_structure(double_star_graph(n));
    }
    for (int n : {4, 8, 20}) {
        check_structure(clique_star_graph(n));
    }
    for (int k : {1, 2, 5}) {
        check_structure(glitter_star_graph(k));
    }
}

TEST_CASE("disjoint sets track size and maximum key") {
    DisjointSets ds(std::vector<int>{5, 1, 7, 2});
    CHECK(ds.components() == 4);
    CHECK(ds.unite(0, 1));
    CHECK_FALSE(ds.unite(1, 0));
    CHECK(ds.size(1) == 2);
    CHECK(ds.max_key(1) == 5);
    CHECK(ds.unite(3, 2));
    CHECK(ds.max_key(3) == 7);
    CHECK(ds.unite(0, 3));
    CHECK(ds.size(2) == 4);
    CHECK(ds.max_key(0) == 7);
    CHECK(ds.components() == 1);
}

} // TEST_SUITE
