#include "walklab/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "walklab/errors.hpp"
#include "walklab/parallel.hpp"
#include "walklab/random.hpp"

namespace walklab {
namespace {

std::size_t offset_of(const Graph &graph, Vertex v) { return static_cast<std::size_t>(graph.offset(v)); }

Vertex step(const Graph &graph, const WalkKernel &kernel, Vertex v, Rng &rng) {
    const auto nb = graph.neighbors(v);
    const double *first = kernel.cumulative.data() + offset_of(graph, v);
    const double *last = first + nb.size();
    const double x = rng.uniform() * last[-1];
    const auto slot = std::min<std::size_t>(static_cast<std::size_t>(std::upper_bound(first, last, x) - first),
                                            nb.size() - 1);
    return nb[slot];
}

void check_vertex(const Graph &graph, Vertex v, const char *what) {
    if (v < 0 || v >= graph.num_vertices()) {
        throw DataError(detail::concat(what, " vertex ", v, " is out of range"));
    }
}

CoverEstimate summarize(const std::vector<std::uint64_t> &steps, Vertex start, std::uint64_t seed) {
    CoverEstimate est;
    est.trials = static_cast<int>(steps.size());
    est.start = start;
    est.seed = seed;
    double sum = 0.0;
    for (std::uint64_t s : steps) {
        sum += static_cast<double>(s);
    }
    est.mean = sum / est.trials;
    double sq = 0.0;
    for (std::uint64_t s : steps) {
        const double d = static_cast<double>(s) - est.mean;
        sq += d * d;
    }
    est.std_error = std::sqrt(sq / (est.trials - 1)) / std::sqrt(static_cast<double>(est.trials));
    est.ci_low = est.mean - 1.96 * est.std_error;
    est.ci_high = est.mean + 1.96 * est.std_error;
    return est;
}

template <typename Trial>
CoverEstimate run_trials(int trials, std::uint64_t master_seed, unsigned threads, Vertex start, Trial &&trial) {
    if (trials < 2) {
        throw DataError(detail::concat("need at least two trials, got ", trials));
    }
    std::vector<std::uint64_t> steps(static_cast<std::size_t>(trials));
    parallel_for(steps.size(), threads, [&](std::size_t i) { steps[i] = trial(trial_seed(master_seed, i)); });
    return summarize(steps, start, master_seed);
}

} // namespace

double WalkKernel::probability(const Graph &graph, Vertex v, std::size_t slot) const {
    const std::size_t base = offset_of(graph, v);
    const double below = slot == 0 ? 0.0 : cumulative[base + slot - 1];
    return (cumulative[base + slot] - below) / cumulative[base + graph.neighbors(v).size() - 1];
}

WalkKernel build_kernel(const Graph &graph, const EdgeFunction<double> &c) {
    if (c.size() != graph.num_edges()) {
        throw DataError(detail::concat("kernel needs ", graph.num_edges(), " conductances, got ", c.size()));
    }
    WalkKernel kernel;
    kernel.cumulative.resize(2 * static_cast<std::size_t>(graph.num_edges()));
    kernel.strength = Eigen::VectorXd::Zero(graph.num_vertices());
    std::size_t slot = 0;
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
        double running = 0.0;
        for (EdgeId e : graph.incident_edges(v)) {
            if (!(c[e] > 0.0)) {
                throw DataError(detail::concat("conductance of edge ", e, " must be positive"));
            }
            running += c[e];
            kernel.cumulative[slot++] = running;
        }
        kernel.strength[v] = running;
    }
    return kernel;
}

std::uint64_t simulate_cover(const Graph &graph, const WalkKernel &kernel, Vertex start, std::uint64_t seed) {
    check_vertex(graph, start, "start");
    Rng rng(seed);
    std::vector<bool> seen(static_cast<std::size_t>(graph.num_vertices()), false);
    seen[start] = true;
    int remaining = graph.num_vertices() - 1;
    std::uint64_t steps = 0;
    Vertex v = start;
    while (remaining > 0) {
        if (++steps > kStepCap) {
            throw DataError(detail::concat("cover walk exceeded the step cap of ", kStepCap));
        }
        v = step(graph, kernel, v, rng);
        if (!seen[v]) {
            seen[v] = true;
            --remaining;
        }
    }
    return steps;
}

std::uint64_t simulate_hitting(const Graph &graph, const WalkKernel &kernel, Vertex from, Vertex to,
                               std::uint64_t seed) {
    check_vertex(graph, from, "source");
    check_vertex(graph, to, "target");
    Rng rng(seed);
    std::uint64_t steps = 0;
    for (Vertex v = from; v != to;) {
        if (++steps > kStepCap) {
            throw DataError(detail::concat("hitting walk exceeded the step cap of ", kStepCap));
        }
        v = step(graph, kernel, v, rng);
    }
    return steps;
}

CoverEstimate estimate_cover_time(const Graph &graph, const WalkKernel &kernel, Vertex start, int trials,
                                  std::uint64_t master_seed, unsigned threads) {
    check_vertex(graph, start, "start");
    return run_trials(trials, master_seed, threads, start,
                      [&](std::uint64_t seed) { return simulate_cover(graph, kernel, start, seed); });
}

CoverEstimate estimate_hitting_time(const Graph &graph, const WalkKernel &kernel, Vertex from, Vertex to,
                                    int trials, std::uint64_t master_seed, unsigned threads) {
    check_vertex(graph, from, "source");
    check_vertex(graph, to, "target");
    return run_trials(trials, master_seed, threads, from,
                      [&](std::uint64_t seed) { return simulate_hitting(graph, kernel, from, to, seed); });
}

Graph scaling_graph(Family family, int n) {
    switch (family) {
    case Family::glitter_star:
        if (n < 3 || n % 2 == 0) {
            throw GraphError(GraphError::Kind::invalid_parameter, "glitter_star: n must be odd and >= 3");
        }
        return glitter_star_graph((n - 1) / 2);
    case Family::path:
    case Family::star:
    case Family::cycle:
    case Family::complete:
    case Family::lollipop:
    case Family::clique_star:
    case Family::double_star: {
        GraphFamily spec;
        spec.family = family;
        spec.n = n;
        return generate(spec);
    }
    default:
        throw DataError(detail::concat("family ", family_name(family), " has no single-size parameterisation"));
    }
}

Vertex default_start(Family) { return 0; }

ScalingResult scaling_experiment(Family family, RuleKind rule, std::span<const int> sizes, int trials,
                                 std::uint64_t master_seed, std::optional<Vertex> start, unsigned threads) {
    if (sizes.size() < 3 || !std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
        throw DataError("scaling experiment needs at least three strictly increasing sizes");
    }
    ScalingResult result;
    std::vector<double> ns;
    std::vector<double> means;
    for (int n : sizes) {
        const Graph graph = scaling_graph(family, n);
        const WalkKernel kernel = build_kernel(graph, evaluate_rule(graph, ConductanceRule{rule, {}}).conductance);
        ScalingRow row{family, n, rule,
                       estimate_cover_time(graph, kernel, start.value_or(default_start(family)), trials, master_seed,
                                           threads)};
        ns.push_back(n);
        means.push_back(row.estimate.mean);
        result.mean_over_n2.push_back(row.estimate.mean / (static_cast<double>(n) * n));
        result.rows.push_back(row);
    }
    result.slope = fit_loglog_slope(ns, means);
    return result;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DataError("slope fit needs two or more paired points");
    }
    const double k = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

} // namespace walklab
