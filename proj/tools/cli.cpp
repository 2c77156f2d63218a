#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "walklab/bounds.hpp"
#include "walklab/conductance.hpp"
#include "walklab/electrical.hpp"
#include "walklab/errors.hpp"
#include "walklab/generators.hpp"
#include "walklab/io.hpp"
#include "walklab/rational.hpp"
#include "walklab/simulator.hpp"
#include "walklab/spanning_tree.hpp"

namespace walklab::cli {
namespace {

namespace fs = std::filesystem;

struct NamedSuite {
    const char *name;
    Family family;
    RuleKind rule;
    std::vector<int> sizes;
};

const std::vector<NamedSuite> &named_suites() {
    static const std::vector<NamedSuite> suites{
        {"lollipop-scaling", Family::lollipop, RuleKind::unit, {30, 60, 90}},
        {"double-star-scaling", Family::double_star, RuleKind::min_degree, {64, 128, 256, 512}},
        {"glitter-star-scaling", Family::glitter_star, RuleKind::max_degree, {65, 129, 257, 513}},
    };
    return suites;
}

// Options shared by every subcommand. Strings are resolved after parsing so
// errors in them are data errors, not usage errors.
struct Options {
    std::string out;
    std::string graph_path;
    std::string rule = "min-degree";

    std::string family;
    int n = 0, a = 0, b = 0, spokes = 0;
    std::vector<int> degrees;
    double p = 0.0;
    std::uint64_t seed = 0;

    std::string weights;
    std::string alpha = "2/3";

    std::string mode = "auto";
    int exact_limit = kDefaultExactCycLimit;

    int start = -1;
    int trials = 200;

    std::string name;
    std::vector<int> sizes;
    std::string out_dir = ".";
};

Json provenance(const std::vector<std::string> &args, const std::string &command) {
    Json argv = Json::array();
    for (const std::string &a : args) {
        argv.push_back(a);
    }
    return Json{{"command", command}, {"argv", std::move(argv)}};
}

void emit(const Json &doc, const std::string &path, std::ostream &out) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
    } else {
        write_file_atomic(path, text);
    }
}

Graph load_graph(const std::string &path) { return graph_from_json(read_json_file(path)); }

ConductanceRule resolve_rule(const std::string &text, const Graph &graph) {
    if (text.starts_with("file:")) {
        return ConductanceRule::explicit_values(weights_from_json(read_json_file(text.substr(5)), graph.num_edges()));
    }
    if (auto kind = parse_rule(text)) {
        return ConductanceRule{*kind, {}};
    }
    throw DataError(detail::concat("unknown rule '", text, "'"));
}

RuleKind resolve_rule_kind(const std::string &text) {
    if (auto kind = parse_rule(text)) {
        return *kind;
    }
    throw DataError(detail::concat("unknown rule '", text, "'"));
}

Family resolve_family(const std::string &text) {
    if (auto f = parse_family(text)) {
        return *f;
    }
    throw DataError(detail::concat("unknown family '", text, "'"));
}

std::uint64_t parse_seed(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DataError(detail::concat("invalid seed '", text, "'"));
    }
    return value;
}

SolverOptions solver_options() {
    SolverOptions opts;
    opts.threads = thread_budget();
    return opts;
}

EdgeFunction<double> resolve_weights(const std::string &spec, const Graph &graph, const ConductancePair<double> &rule) {
    if (spec == "min-degree-r") {
        EdgeFunction<double> w{EdgeRole::weight, Eigen::VectorXd(graph.num_edges())};
        for (EdgeId e = 0; e < graph.num_edges(); ++e) {
            const Edge &edge = graph.edge(e);
            w.values[e] = std::min(graph.degree(edge.u), graph.degree(edge.v));
        }
        return w;
    }
    if (spec == "effective-resistance") {
        return resistance_weights(effective_resistances(graph, rule.conductance, solver_options()));
    }
    if (spec.starts_with("sample:")) {
        return sample_feasible_weights(graph, rule.resistance, parse_seed(std::string_view(spec).substr(7)));
    }
    if (spec.starts_with("file:")) {
        EdgeFunction<double> w{EdgeRole::weight, Eigen::VectorXd(graph.num_edges())};
        const std::vector<double> values = weights_from_json(read_json_file(spec.substr(5)), graph.num_edges());
        for (EdgeId e = 0; e < graph.num_edges(); ++e) {
            w.values[e] = values[static_cast<std::size_t>(e)];
        }
        return w;
    }
    throw DataError(detail::concat("unknown weight source '", spec,
                                   "' (expected min-degree-r, effective-resistance, sample:<seed> or file:<path>)"));
}

int cmd_gen(const Options &o, const std::vector<std::string> &args, std::ostream &out) {
    GraphFamily spec;
    spec.family = resolve_family(o.family);
    spec.n = o.n;
    spec.a = o.a;
    spec.b = o.b;
    spec.spokes = o.spokes;
    spec.degrees = o.degrees;
    spec.edge_probability = o.p;
    spec.seed = o.seed;
    Json doc = graph_to_json(generate(spec));
    doc["family"] = family_name(spec.family);
    doc["provenance"] = provenance(args, "gen");
    emit(doc, o.out, out);
    return kExitOk;
}

int cmd_analyze(const Options &o, const std::vector<std::string> &args, std::ostream &out) {
    const Graph graph = load_graph(o.graph_path);
    const ConductanceRule rule = resolve_rule(o.rule, graph);
    const auto pair = evaluate_rule(graph, rule);
    const auto analysis = analyze(graph, pair.conductance, solver_options());
    const double foster = foster_residual(graph.num_vertices(), pair.resistance, analysis.resistance.edge);
    CycBoundsOptions bopts;
    bopts.exact_limit = o.exact_limit;
    bopts.min_degree_rule = rule.kind == RuleKind::min_degree;
    const CycBounds bounds = cyc_bounds(graph, pair.conductance, analysis, bopts);

    Json doc{{"n", graph.num_vertices()}, {"m", graph.num_edges()}, {"rule", o.rule}};
    doc.update(analysis_to_json(analysis, foster, bounds));
    doc["provenance"] = provenance(args, "analyze");
    emit(doc, o.out, out);
    return kExitOk;
}

int cmd_tree(const Options &o, const std::vector<std::string> &args, std::ostream &out) {
    const Graph graph = load_graph(o.graph_path);
    const auto pair = evaluate_rule(graph, resolve_rule(o.rule, graph));
    const EdgeFunction<double> w = resolve_weights(o.weights, graph, pair);
    const FeasibilityReport report = check_feasible(graph, pair.resistance, w);
    if (!report.feasible) {
        throw DataError(detail::concat("weights '", o.weights, "' are not feasible for rule '", o.rule,
                                       "': ", report.range_violations.size(), " range violations, sum residual ",
                                       report.sum_residual));
    }
    const SpanningTreeResult tree = low_weight_spanning_tree(graph, pair.resistance, w, Rational::parse(o.alpha));
    Json doc{{"n", graph.num_vertices()}, {"m", graph.num_edges()}, {"rule", o.rule}, {"weights", o.weights}};
    doc.update(tree_to_json(graph, tree));
    doc["mst_total"] = mst(graph, w).total_weight;
    doc["provenance"] = provenance(args, "tree");
    emit(doc, o.out, out);
    return kExitOk;
}

int cmd_cyc(const Options &o, const std::vector<std::string> &args, std::ostream &out) {
    const Graph graph = load_graph(o.graph_path);
    const ConductanceRule rule = resolve_rule(o.rule, graph);
    const auto pair = evaluate_rule(graph, rule);
    const auto analysis = analyze(graph, pair.conductance, solver_options());
    if (o.mode != "auto" && o.mode != "exact" && o.mode != "bounds") {
        throw DataError(detail::concat("unknown cyc mode '", o.mode, "'"));
    }
    if (o.mode == "exact" && graph.num_vertices() > o.exact_limit) {
        throw DataError(detail::concat("exact cyclic cover needs n <= ", o.exact_limit, ", graph has n = ",
                                       graph.num_vertices()));
    }
    CycBoundsOptions bopts;
    bopts.exact_limit = o.mode == "bounds" ? 0 : o.exact_limit;
    bopts.min_degree_rule = rule.kind == RuleKind::min_degree;
    const CycBounds bounds = cyc_bounds(graph, pair.conductance, analysis, bopts);
    Json doc{{"n", graph.num_vertices()}, {"m", graph.num_edges()}, {"rule", o.rule}, {"mode", o.mode}};
    doc["bounds"] = bounds_to_json(bounds);
    doc["provenance"] = provenance(args, "cyc");
    emit(doc, o.out, out);
    return kExitOk;
}

int cmd_cover(const Options &o, const std::vector<std::string> &args, std::ostream &out) {
    const Graph graph = load_graph(o.graph_path);
    const auto pair = evaluate_rule(graph, resolve_rule(o.rule, graph));
    const WalkKernel kernel = build_kernel(graph, pair.conductance);
    const Vertex start = o.start < 0 ? 0 : o.start;
    const CoverEstimate est = estimate_cover_time(graph, kernel, start, o.trials, o.seed, thread_budget());
    Json doc{{"n", graph.num_vertices()}, {"m", graph.num_edges()}, {"rule", o.rule}};
    doc.update(cover_to_json(est));
    doc["provenance"] = provenance(args, "cover");
    emit(doc, o.out, out);
    return kExitOk;
}

int cmd_suite(const Options &o, const std::vector<std::string> &args, std::ostream &out) {
    const NamedSuite *preset = nullptr;
    for (const NamedSuite &s : named_suites()) {
        if (o.name == s.name) {
            preset = &s;
        }
    }
    if (!preset && o.family.empty()) {
        throw DataError(detail::concat("suite '", o.name, "' is not a named suite; pass --family"));
    }
    const Family family = o.family.empty() ? preset->family : resolve_family(o.family);
    const RuleKind rule = o.rule.empty() ? (preset ? preset->rule : RuleKind::min_degree) : resolve_rule_kind(o.rule);
    const std::vector<int> sizes = o.sizes.empty() && preset ? preset->sizes : o.sizes;
    std::optional<Vertex> start;
    if (o.start >= 0) {
        start = o.start;
    }

    const ScalingResult result = scaling_experiment(family, rule, sizes, o.trials, o.seed, start, thread_budget());

    Json footer{
        {"suite", o.name},
        {"family", family_name(family)},
        {"rule", rule_name(rule)},
        {"sizes", sizes},
        {"trials", o.trials},
        {"seed", o.seed},
        {"slope", result.slope},
        {"mean_over_n2", result.mean_over_n2},
        {"provenance", provenance(args, "suite")},
    };
    const fs::path dir = o.out_dir;
    if (!fs::is_directory(dir)) {
        throw DataError(detail::concat("output directory ", dir.string(), " does not exist"));
    }
    const fs::path csv = dir / (o.name + ".csv");
    const fs::path json = dir / (o.name + ".json");
    write_file_atomic(csv, scaling_csv(result));
    write_file_atomic(json, footer.dump(2) + "\n");
    out << scaling_csv(result) << footer.dump() << "\n";
    return kExitOk;
}

} // namespace

unsigned thread_budget() {
    const char *env = std::getenv("WALKLAB_THREADS");
    if (!env || !*env) {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    unsigned value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DataError(detail::concat("WALKLAB_THREADS must be a non-negative integer, got '", text, "'"));
    }
    return std::max(1u, value);
}

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"walklab: local-rule random walks, electrical analysis and cyclic cover bounds", "walklab"};
    app.require_subcommand(1);
    Options o;

    auto *gen = app.add_subcommand("gen", "write a generated graph as JSON");
    gen->add_option("--family", o.family, "graph family")->required();
    gen->add_option("--n", o.n, "number of vertices");
    gen->add_option("--a", o.a, "left side of complete_bipartite");
    gen->add_option("--b", o.b, "right side of complete_bipartite");
    gen->add_option("--spokes", o.spokes, "glitter_star spokes");
    gen->add_option("--degrees", o.degrees, "local_rule_adversary d1,d2,d3,d4")->delimiter(',');
    gen->add_option("--p", o.p, "random_connected edge probability");
    gen->add_option("--seed", o.seed, "random_connected seed");
    gen->add_option("--out", o.out, "output file (stdout if omitted)");

    auto *an = app.add_subcommand("analyze", "exact chain analysis report");
    an->add_option("--graph", o.graph_path, "graph JSON")->required();
    an->add_option("--rule", o.rule, "min-degree | sqrt | max-degree | unit | file:<path>");
    an->add_option("--exact-limit", o.exact_limit, "largest n for exact cyclic cover time");
    an->add_option("--out", o.out, "output file (stdout if omitted)");

    auto *tree = app.add_subcommand("tree", "low-weight spanning tree construction");
    tree->add_option("--graph", o.graph_path, "graph JSON")->required();
    tree->add_option("--weights", o.weights, "min-degree-r | effective-resistance | sample:<seed> | file:<path>")
        ->required();
    tree->add_option("--alpha", o.alpha, "p/q in (0,1)");
    tree->add_option("--rule", o.rule, "rule supplying r = 1/c");
    tree->add_option("--out", o.out, "output file (stdout if omitted)");

    auto *cyc = app.add_subcommand("cyc", "cyclic cover time: exact value and bounds");
    cyc->add_option("--graph", o.graph_path, "graph JSON")->required();
    cyc->add_option("--rule", o.rule, "conductance rule");
    cyc->add_option("--mode", o.mode, "auto | exact | bounds");
    cyc->add_option("--exact-limit", o.exact_limit, "largest n for exact cyclic cover time");
    cyc->add_option("--out", o.out, "output file (stdout if omitted)");

    auto *cover = app.add_subcommand("cover", "Monte Carlo cover time estimate");
    cover->add_option("--graph", o.graph_path, "graph JSON")->required();
    cover->add_option("--rule", o.rule, "conductance rule");
    cover->add_option("--start", o.start, "start vertex (default 0)");
    cover->add_option("--trials", o.trials, "number of walks");
    cover->add_option("--seed", o.seed, "master seed");
    cover->add_option("--out", o.out, "output file (stdout if omitted)");

    auto *suite = app.add_subcommand("suite", "cover time scaling suite; writes <name>.csv and <name>.json");
    std::string suite_rule;
    suite->add_option("--name", o.name, "suite name")->required();
    suite->add_option("--family", o.family, "graph family (defaults from named suites)");
    suite->add_option("--sizes", o.sizes, "comma separated sizes")->delimiter(',');
    suite->add_option("--rule", suite_rule, "conductance rule");
    suite->add_option("--trials", o.trials, "walks per size");
    suite->add_option("--seed", o.seed, "master seed");
    suite->add_option("--start", o.start, "start vertex");
    suite->add_option("--out-dir", o.out_dir, "output directory");

    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "walklab: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) {
            return cmd_gen(o, args, out);
        }
        if (*an) {
            return cmd_analyze(o, args, out);
        }
        if (*tree) {
            return cmd_tree(o, args, out);
        }
        if (*cyc) {
            return cmd_cyc(o, args, out);
        }
        if (*cover) {
            return cmd_cover(o, args, out);
        }
        o.rule = suite_rule;
        return cmd_suite(o, args, out);
    } catch (const InvariantError &e) {
        err << "walklab: invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const DataError &e) {
        err << "walklab: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception &e) {
        err << "walklab: internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

} // namespace walklab::cli
