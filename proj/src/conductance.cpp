#include "walklab/conductance.hpp"

#include <algorithm>
#include <string>

#include "walklab/random.hpp"

namespace walklab {

std::string_view rule_name(RuleKind kind) {
    switch (kind) {
    case RuleKind::min_degree:
        return "min-degree";
    case RuleKind::sqrt_product:
        return "sqrt";
    case RuleKind::max_degree:
        return "max-degree";
    case RuleKind::unit:
        return "unit";
    case RuleKind::explicit_table:
        return "explicit";
    }
    return "unknown";
}

std::optional<RuleKind> parse_rule(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "min-degree") {
        return RuleKind::min_degree;
    }
    if (s == "sqrt") {
        return RuleKind::sqrt_product;
    }
    if (s == "max-degree") {
        return RuleKind::max_degree;
    }
    if (s == "unit") {
        return RuleKind::unit;
    }
    return std::nullopt;
}

FeasibilityReport check_feasible(const Graph &graph, const EdgeFunction<double> &r,
                                 const EdgeFunction<double> &w, double tol) {
    const int m = graph.num_edges();
    if (r.size() != m || w.size() != m) {
        throw DataError(detail::concat("feasibility check: expected ", m, " values, got r=", r.size(),
                                       " w=", w.size()));
    }
    FeasibilityReport report;
    double ratio_sum = 0.0;
    for (EdgeId e = 0; e < m; ++e) {
        if (!(r[e] > 0.0)) {
            throw DataError(detail::concat("resistance of edge ", e, " must be positive, got ", r[e]));
        }
        const double slack = kFeasibleRangeTolerance * std::max(1.0, r[e]);
        if (!(w[e] >= -slack) || !(w[e] <= r[e] + slack)) {
            report.range_violations.push_back({e, w[e], r[e]});
        }
        ratio_sum += w[e] / r[e];
    }
    report.sum_residual = std::abs(ratio_sum - (graph.num_vertices() - 1));
    report.feasible = report.range_violations.empty() && report.sum_residual <= tol;
    return report;
}

EdgeFunction<double> sample_feasible_weights(const Graph &graph, const EdgeFunction<double> &r,
                                             std::uint64_t seed) {
    const int m = graph.num_edges();
    const double target = graph.num_vertices() - 1;
    EdgeFunction<double> w{EdgeRole::weight, VectorX<double>(m)};
    if (graph.is_tree()) {
        w.values = r.values;
        return w;
    }

    Rng rng(seed);
    VectorX<double> rho(m);
    for (EdgeId e = 0; e < m; ++e) {
        rho[e] = rng.uniform();
    }
    std::vector<bool> clamped(static_cast<std::size_t>(m), false);
    int clamped_count = 0;
    constexpr int kMaxRounds = 100;
    for (int round = 0; round < kMaxRounds; ++round) {
        double free_sum = 0.0;
        for (EdgeId e = 0; e < m; ++e) {
            if (!clamped[e]) {
                free_sum += rho[e];
            }
        }
        const double scale = (target - clamped_count) / free_sum;
        bool changed = false;
        for (EdgeId e = 0; e < m; ++e) {
            if (clamped[e]) {
                continue;
            }
            rho[e] *= scale;
            if (rho[e] >= 1.0) {
                rho[e] = 1.0;
                clamped[e] = true;
                ++clamped_count;
                changed = true;
            }
        }
        if (!changed && std::abs(rho.sum() - target) <= 1e-12 * std::max(1.0, target)) {
            break;
        }
    }
    w.values = rho.cwiseProduct(r.values);
    WALKLAB_ENSURE(check_feasible(graph, r, w).feasible, "sampled weights are not feasible (seed ", seed, ")");
    return w;
}

} // namespace walklab
