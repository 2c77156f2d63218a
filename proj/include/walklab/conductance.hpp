#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "walklab/errors.hpp"
#include "walklab/graph.hpp"

namespace walklab {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class RuleKind { min_degree, sqrt_product, max_degree, unit, explicit_table };

/// Local conductance rule, or an explicit per-edge conductance table aligned
/// with the graph's canonical edge order.
struct ConductanceRule {
    RuleKind kind = RuleKind::min_degree;
    std::vector<double> table;

    static ConductanceRule min_degree() { return {RuleKind::min_degree, {}}; }
    static ConductanceRule sqrt_product() { return {RuleKind::sqrt_product, {}}; }
    static ConductanceRule max_degree() { return {RuleKind::max_degree, {}}; }
    static ConductanceRule unit() { return {RuleKind::unit, {}}; }
    static ConductanceRule explicit_values(std::vector<double> c) {
        return {RuleKind::explicit_table, std::move(c)};
    }
};

/// "min-degree", "sqrt", "max-degree", "unit"; "explicit" for tables.
std::string_view rule_name(RuleKind kind);
std::optional<RuleKind> parse_rule(std::string_view name);

enum class EdgeRole { conductance, resistance, weight, ratio, effective_resistance };

/// Per-edge values aligned with Graph::edges().
template <typename Scalar = double>
struct EdgeFunction {
    EdgeRole role = EdgeRole::weight;
    VectorX<Scalar> values;

    Eigen::Index size() const { return values.size(); }
    Scalar operator[](EdgeId e) const { return values[e]; }
};

template <typename Scalar = double>
struct ConductancePair {
    EdgeFunction<Scalar> conductance;
    EdgeFunction<Scalar> resistance;
};

template <typename Scalar = double>
ConductancePair<Scalar> evaluate_rule(const Graph &graph, const ConductanceRule &rule) {
    const int m = graph.num_edges();
    ConductancePair<Scalar> out{{EdgeRole::conductance, VectorX<Scalar>(m)},
                                {EdgeRole::resistance, VectorX<Scalar>(m)}};
    if (rule.kind == RuleKind::explicit_table && static_cast<int>(rule.table.size()) != m) {
        throw DataError(detail::concat("conductance table has ", rule.table.size(),
                                       " entries, graph has ", m, " edges"));
    }
    for (EdgeId e = 0; e < m; ++e) {
        const auto du = static_cast<Scalar>(graph.degree(graph.edge(e).u));
        const auto dv = static_cast<Scalar>(graph.degree(graph.edge(e).v));
        Scalar r{};
        switch (rule.kind) {
        case RuleKind::min_degree:
            r = std::min(du, dv);
            break;
        case RuleKind::max_degree:
            r = std::max(du, dv);
            break;
        case RuleKind::sqrt_product:
            r = std::sqrt(du * dv);
            break;
        case RuleKind::unit:
            r = Scalar(1);
            break;
        case RuleKind::explicit_table: {
            const double c = rule.table[static_cast<std::size_t>(e)];
            if (!(c > 0.0) || !std::isfinite(c)) {
                throw DataError(detail::concat("conductance of edge ", e, " must be positive and finite, got ", c));
            }
            out.conductance.values[e] = static_cast<Scalar>(c);
            out.resistance.values[e] = Scalar(1) / static_cast<Scalar>(c);
            continue;
        }
        }
        out.resistance.values[e] = r;
        out.conductance.values[e] = Scalar(1) / r;
    }
    return out;
}

template <typename Scalar>
Scalar total_conductance(const EdgeFunction<Scalar> &c) {
    return c.values.sum();
}

/// Total conductance; under the min-degree rule also checks sum(c) <= n-1.
template <typename Scalar>
Scalar total_conductance(const Graph &graph, const EdgeFunction<Scalar> &c, RuleKind rule) {
    const Scalar total = total_conductance(c);
    if (rule == RuleKind::min_degree) {
        WALKLAB_ENSURE(total <= Scalar(graph.num_vertices() - 1) + Scalar(1e-9) * graph.num_vertices(),
                       "min-degree total conductance ", total, " exceeds n-1 = ", graph.num_vertices() - 1);
    }
    return total;
}

/// Per-vertex sum of incident conductances.
template <typename Scalar>
VectorX<Scalar> vertex_conductance(const Graph &graph, const EdgeFunction<Scalar> &c) {
    VectorX<Scalar> s = VectorX<Scalar>::Zero(graph.num_vertices());
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        s[graph.edge(e).u] += c[e];
        s[graph.edge(e).v] += c[e];
    }
    return s;
}

/// pi(v) = sum_{u in N(v)} c(u,v) / (2 sum_e c(e)); sums to one.
template <typename Scalar>
VectorX<Scalar> stationary_distribution(const Graph &graph, const EdgeFunction<Scalar> &c) {
    return vertex_conductance(graph, c) / (Scalar(2) * total_conductance(c));
}

struct RangeViolation {
    EdgeId edge = 0;
    double w = 0.0;
    double r = 0.0;
};

struct FeasibilityReport {
    bool feasible = false;
    std::vector<RangeViolation> range_violations;
    double sum_residual = 0.0; ///< |sum_e w(e)/r(e) - (n-1)|
};

inline constexpr double kFeasibleSumTolerance = 1e-9;
inline constexpr double kFeasibleRangeTolerance = 1e-12;

/// Checks 0 <= w <= r per edge (relative slack kFeasibleRangeTolerance) and
/// sum w/r = n-1 within `tol`.
FeasibilityReport check_feasible(const Graph &graph, const EdgeFunction<double> &r,
                                 const EdgeFunction<double> &w, double tol = kFeasibleSumTolerance);

/// Random feasible weight function w.r.t. r, deterministic in seed. Ratios
/// w/r are i.i.d. uniform, rescaled to sum n-1 with clamping at 1 and the
/// clamped excess redistributed. Trees get w = r exactly.
EdgeFunction<double> sample_feasible_weights(const Graph &graph, const EdgeFunction<double> &r,
                                             std::uint64_t seed);

} // namespace walklab
