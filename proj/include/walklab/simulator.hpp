#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "walklab/conductance.hpp"
#include "walklab/generators.hpp"
#include "walklab/graph.hpp"

namespace walklab {

/// Transition sampler for the conductance walk. cumulative[] is aligned
/// with the graph's CSR neighbour slots and holds, per vertex, running
/// sums of incident conductances.
struct WalkKernel {
    std::vector<double> cumulative;
    Eigen::VectorXd strength; ///< total incident conductance per vertex

    /// P(v -> i-th neighbour of v).
    double probability(const Graph &graph, Vertex v, std::size_t slot) const;
};

WalkKernel build_kernel(const Graph &graph, const EdgeFunction<double> &c);

inline constexpr std::uint64_t kStepCap = 10'000'000'000ULL;

/// Steps until every vertex has been visited, starting at `start`.
std::uint64_t simulate_cover(const Graph &graph, const WalkKernel &kernel, Vertex start, std::uint64_t seed);

/// Steps of the first passage from `from` to `to` (0 when equal).
std::uint64_t simulate_hitting(const Graph &graph, const WalkKernel &kernel, Vertex from, Vertex to,
                               std::uint64_t seed);

struct CoverEstimate {
    int trials = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    Vertex start = 0;
    std::uint64_t seed = 0;
};

/// Mean over `trials` independent walks; trial i uses trial_seed(seed, i),
/// so results do not depend on `threads`.
CoverEstimate estimate_cover_time(const Graph &graph, const WalkKernel &kernel, Vertex start, int trials,
                                  std::uint64_t master_seed, unsigned threads = 1);

/// Same estimator for the first-passage time from -> to.
CoverEstimate estimate_hitting_time(const Graph &graph, const WalkKernel &kernel, Vertex from, Vertex to,
                                    int trials, std::uint64_t master_seed, unsigned threads = 1);

/// Graph of `family` with n vertices; glitter stars take n = 2k+1.
Graph scaling_graph(Family family, int n);

/// Default start: vertex 0, which is a clique vertex of the lollipop and the
/// centre of the stars.
Vertex default_start(Family family);

struct ScalingRow {
    Family family = Family::path;
    int n = 0;
    RuleKind rule = RuleKind::unit;
    CoverEstimate estimate;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    double slope = 0.0;                 ///< least-squares slope of log(mean) on log(n)
    std::vector<double> mean_over_n2;   ///< mean / n^2 per row
};

ScalingResult scaling_experiment(Family family, RuleKind rule, std::span<const int> sizes, int trials,
                                 std::uint64_t master_seed, std::optional<Vertex> start = std::nullopt,
                                 unsigned threads = 1);

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace walklab
