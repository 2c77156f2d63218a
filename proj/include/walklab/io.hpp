#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "walklab/bounds.hpp"
#include "walklab/electrical.hpp"
#include "walklab/graph.hpp"
#include "walklab/simulator.hpp"
#include "walklab/spanning_tree.hpp"

namespace walklab {

using Json = nlohmann::ordered_json;

/// {"n": n, "edges": [[u,v], ...]} in canonical order.
Json graph_to_json(const Graph &graph);

/// Inverse of graph_to_json. Rejects files whose edges are not canonical
/// (u < v, strictly increasing); other keys are ignored.
Graph graph_from_json(const Json &doc);

Json bounds_to_json(const CycBounds &bounds);

/// {"pi", "total_conductance", "foster_residual", "hitting", "commute",
///  "edge_R", "bounds"} plus "return_time".
Json analysis_to_json(const ChainAnalysis<double> &analysis, double foster_residual, const CycBounds &bounds);

/// {"alpha": "p/q", "edges", "costs": {"step1","step2","step3"}, "total", "bound"}.
Json tree_to_json(const Graph &graph, const SpanningTreeResult &tree);

Json cover_to_json(const CoverEstimate &estimate);

inline constexpr const char *kScalingCsvHeader = "family,n,rule,start,trials,seed,mean,stderr,ci_low,ci_high";

std::string scaling_csv(const ScalingResult &result);

/// Weights aligned with the canonical edge order, read from either a bare
/// JSON array or {"weights": [...]}.
std::vector<double> weights_from_json(const Json &doc, int num_edges);

std::string read_text_file(const std::filesystem::path &path);
Json read_json_file(const std::filesystem::path &path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);

} // namespace walklab
