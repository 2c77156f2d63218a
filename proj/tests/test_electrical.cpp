#include <doctest.h>

#include "support.hpp"
#include "walklab/electrical.hpp"
#include "walklab/errors.hpp"
#include "walklab/generators.hpp"

using namespace walklab;
using doctest::Approx;

namespace {

ChainAnalysis<double> analyze_rule(const Graph &g, const ConductanceRule &rule, const SolverOptions &opts = {}) {
    return analyze(g, evaluate_rule(g, rule).conductance, opts);
}

} // namespace

TEST_SUITE("electrical") {

TEST_CASE("hitting time examples") {
    const auto p3 = analyze_rule(path_graph(3), ConductanceRule::unit());
    CHECK(p3.hitting(0, 2) == Approx(4.0));
    CHECK(p3.hitting(1, 2) == Approx(3.0));
    CHECK(p3.hitting(0, 1) == Approx(1.0));
    CHECK(p3.hitting(1, 1) == 0.0);

    const auto k4 = analyze_rule(complete_graph(4), ConductanceRule::unit());
    for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) {
            CHECK(k4.hitting(u, v) == Approx(u == v ? 0.0 : 3.0));
        }
    }
    const auto star = analyze_rule(star_graph(4), ConductanceRule::min_degree());
    CHECK(star.hitting(1, 0) == Approx(1.0));
    CHECK(star.hitting(0, 1) == Approx(5.0));
    CHECK(star.return_time[0] == Approx(2.0));
    CHECK(star.return_time[1] == Approx(6.0));
}

TEST_CASE("commute identity examples") {
    const auto k2 = analyze_rule(path_graph(2), ConductanceRule::unit());
    CHECK(k2.commute(0, 1) == Approx(2.0));
    CHECK(k2.resistance(0, 1) == Approx(1.0));
    const auto p3 = analyze_rule(path_graph(3), ConductanceRule::unit());
    CHECK(p3.commute(0, 2) == Approx(8.0));
    CHECK(p3.resistance(0, 2) == Approx(2.0));
    const auto star = analyze_rule(star_graph(4), ConductanceRule::min_degree());
    CHECK(star.commute(1, 0) == Approx(6.0));
    CHECK(star.total_conductance == Approx(3.0));
    CHECK(verify_commute_identity(star) < 1e-12);
}

TEST_CASE("effective resistance examples") {
    const Graph k4 = complete_graph(4);
    const auto c = evaluate_rule(k4, ConductanceRule::min_degree()).conductance;
    const auto R = effective_resistances(k4, c);
    for (EdgeId e = 0; e < 6; ++e) {
        CHECK(R.edge[e] == Approx(1.5));
    }
    CHECK(foster_residual(k4, c) < 1e-12);
    CHECK(foster_residual(random_tree(15, 2), evaluate_rule(random_tree(15, 2), ConductanceRule::sqrt_product())
                                                   .conductance) < 1e-10);
}

TEST_CASE("graphs too small to walk on") {
    const Graph one = build_graph(1, {});
    const auto c = evaluate_rule(one, ConductanceRule::unit()).conductance;
    CHECK_THROWS_AS(hitting_times(one, c), DataError);
    CHECK(cyclic_cover_exact(Eigen::MatrixXd::Zero(1, 1)).value == 0.0);
}

TEST_CASE("solver agrees with the fundamental-matrix and pseudo-inverse oracles") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const Graph g = oracle::random_graph(rng, 2, 30);
        const Eigen::VectorXd c = oracle::random_conductance(rng, g);
        const auto a = analyze(g, oracle::conductance(c));
        const Eigen::MatrixXd H = oracle::hitting(g, c);
        const double scale = H.maxCoeff();
        CHECK((a.hitting - H).cwiseAbs().maxCoeff() <= 1e-8 * scale);
        CHECK((a.pi - oracle::stationary(g, c)).cwiseAbs().maxCoeff() <= 1e-12);
        const Eigen::MatrixXd pinv = oracle::laplacian_pinv(g, c);
        for (int u = 0; u < g.num_vertices(); ++u) {
            for (int v = 0; v < g.num_vertices(); ++v) {
                CHECK(a.resistance(u, v) == Approx(oracle::resistance(pinv, u, v)).epsilon(1e-8));
            }
        }
        CHECK(verify_commute_identity(a) <= 1e-9);
        CHECK((a.commute - a.commute.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(a.hitting.minCoeff() >= 0.0);
    }
}

TEST_CASE("return times match the first-step system") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_graph(rng, 2, 20);
        const Eigen::VectorXd c = oracle::random_conductance(rng, g);
        const auto a = analyze(g, oracle::conductance(c));
        const Eigen::MatrixXd H = oracle::hitting(g, c);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const double first_step = oracle::return_time_first_step(g, c, H, v);
            CHECK(std::abs(a.return_time[v] - first_step) / first_step <= 1e-8);
            CHECK(a.return_time[v] == Approx(1.0 / a.pi[v]));
        }
    }
}

TEST_CASE("edge resistances stay within range and satisfy Foster") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        const Graph g = oracle::random_graph(rng, 2, 30);
        const Eigen::VectorXd c = oracle::random_conductance(rng, g);
        const auto R = effective_resistances(g, oracle::conductance(c));
        const EdgeFunction<double> r{EdgeRole::resistance, c.cwiseInverse()};
        CHECK(foster_residual(g.num_vertices(), r, R.edge) <= 1e-9 * g.num_vertices());
        CHECK(R.edge.values.minCoeff() >= 0.0);
        CHECK((r.values - R.edge.values).minCoeff() >= 0.0);
        if (g.is_tree()) {
            CHECK((r.values - R.edge.values).cwiseAbs().maxCoeff() <= 1e-9 * r.values.maxCoeff());
        }
    }
}

TEST_CASE("reversibility: forward tour equals half the commute tour") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_graph(rng, 2, 15);
        const auto a = analyze(g, oracle::conductance(oracle::random_conductance(rng, g)));
        const int len = std::uniform_int_distribution<int>(2, 6)(rng);
        std::vector<Vertex> seq;
        for (int k = 0; k < len; ++k) {
            seq.push_back(std::uniform_int_distribution<int>(0, g.num_vertices() - 1)(rng));
        }
        double forward = 0.0;
        double backward = 0.0;
        double commute = 0.0;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const Vertex x = seq[k];
            const Vertex y = seq[(k + 1) % seq.size()];
            forward += a.hitting(x, y);
            backward += a.hitting(y, x);
            commute += a.commute(x, y);
        }
        CHECK(forward == Approx(0.5 * commute).epsilon(1e-8));
        CHECK(forward == Approx(backward).epsilon(1e-8));
    }
}

TEST_CASE("adding an edge never increases effective resistance") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 100) {
        const Graph g = oracle::random_graph(rng, 3, 20);
        const int n = g.num_vertices();
        std::vector<std::pair<Vertex, Vertex>> missing;
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                if (!g.find_edge(a, b)) {
                    missing.emplace_back(a, b);
                }
            }
        }
        if (missing.empty()) {
            continue;
        }
        const auto added = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
        std::vector<std::pair<Vertex, Vertex>> list;
        for (const Edge &e : g.edges()) {
            list.emplace_back(e.u, e.v);
        }
        list.push_back(added);
        const Graph h = build_graph(n, list);
        const Eigen::VectorXd cg = oracle::random_conductance(rng, g);
        Eigen::VectorXd ch(h.num_edges());
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            const auto old = g.find_edge(h.edge(e).u, h.edge(e).v);
            ch[e] = old ? cg[*old] : 1.0;
        }
        const auto Rg = effective_resistances(g, oracle::conductance(cg));
        const auto Rh = effective_resistances(h, oracle::conductance(ch));
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                CHECK(Rh(a, b) <= Rg(a, b) * (1 + 1e-10));
            }
        }
        ++checked;
    }
}

TEST_CASE("min-degree hitting and commute bounds") {
    std::mt19937_64 rng(12);
    std::vector<Graph> graphs{lollipop_graph(30), glitter_star_graph(10), double_star_graph(20),
                              clique_star_graph(16)};
    for (int i = 0; i < 40; ++i) {
        graphs.push_back(oracle::random_graph(rng, 2, 40));
    }
    for (const Graph &g : graphs) {
        const auto a = analyze_rule(g, ConductanceRule::min_degree());
        const double n2 = static_cast<double>(g.num_vertices()) * g.num_vertices();
        CHECK(a.hitting.maxCoeff() <= 6 * n2);
        CHECK(a.commute.maxCoeff() <= 12 * n2);
    }
}

TEST_CASE("iterative path agrees with the dense path") {
    std::mt19937_64 rng(13);
    SolverOptions iterative;
    iterative.dense_limit = 0;
    for (int i = 0; i < 10; ++i) {
        const Graph g = oracle::random_graph(rng, 2, 40);
        const auto c = oracle::conductance(oracle::random_conductance(rng, g, 0.2, 5.0));
        const auto dense = analyze(g, c);
        const auto sparse = analyze(g, c, iterative);
        CHECK_FALSE(sparse.resistance.is_dense());
        CHECK((dense.hitting - sparse.hitting).cwiseAbs().maxCoeff() <= 1e-6 * dense.hitting.maxCoeff());
        CHECK((dense.resistance.edge.values - sparse.resistance.edge.values).cwiseAbs().maxCoeff() <= 1e-7);
        CHECK(sparse.resistance(0, g.num_vertices() - 1) ==
              Approx(dense.resistance(0, g.num_vertices() - 1)).epsilon(1e-7));
    }
}

TEST_CASE("threaded hitting solves match serial ones") {
    std::mt19937_64 rng(14);
    const Graph g = oracle::random_graph(rng, 30, 30);
    const auto c = oracle::conductance(oracle::random_conductance(rng, g));
    SolverOptions threaded;
    threaded.threads = 4;
    CHECK(hitting_times(g, c).hitting == hitting_times(g, c, threaded).hitting);
}

TEST_CASE("exact cyclic cover examples") {
    const auto p3 = cyclic_cover_exact(analyze_rule(path_graph(3), ConductanceRule::unit()));
    CHECK(p3.value == Approx(8.0));
    CHECK(p3.order.size() == 3);
    const auto k4 = cyclic_cover_exact(analyze_rule(complete_graph(4), ConductanceRule::unit()));
    CHECK(k4.value == Approx(12.0));
    const auto k2 = cyclic_cover_exact(analyze_rule(path_graph(2), ConductanceRule::unit()));
    CHECK(k2.value == Approx(2.0));
    CHECK_THROWS_AS(cyclic_cover_exact(analyze_rule(path_graph(13), ConductanceRule::unit())), DataError);
    CHECK_NOTHROW(cyclic_cover_exact(analyze_rule(path_graph(13), ConductanceRule::unit()), 13));
}

TEST_CASE("subset DP matches permutation enumeration") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 150; ++i) {
        const Graph g = oracle::random_graph(rng, 2, 8);
        const auto a = analyze(g, oracle::conductance(oracle::random_conductance(rng, g)));
        const auto dp = cyclic_cover_exact(a);
        const double brute = oracle::brute_force_cyc(a.hitting);
        CHECK(dp.value == Approx(brute).epsilon(1e-9));
        CHECK(oracle::cycle_sum(a.hitting, dp.order) == Approx(dp.value).epsilon(1e-9));
        std::vector<Vertex> sorted = dp.order;
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0; v < g.num_vertices(); ++v) {
            CHECK(sorted[static_cast<std::size_t>(v)] == v);
        }
    }
}

} // TEST_SUITE
