#include "walklab/io.hpp"

#include <fstream>
#include <sstream>

#include <unistd.h>

#include "walklab/errors.hpp"

namespace walklab {
namespace {

using Kind = GraphError::Kind;

Json matrix_to_json(const Eigen::MatrixXd &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const Eigen::VectorXd &v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

Json edge_pairs(const Graph &graph, const std::vector<EdgeId> &ids) {
    Json edges = Json::array();
    for (EdgeId e : ids) {
        edges.push_back({graph.edge(e).u, graph.edge(e).v});
    }
    return edges;
}

} // namespace

Json graph_to_json(const Graph &graph) {
    Json edges = Json::array();
    for (const Edge &e : graph.edges()) {
        edges.push_back({e.u, e.v});
    }
    return Json{{"n", graph.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw DataError("graph JSON must be an object with keys \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw DataError("graph JSON: \"n\" must be an integer");
    }
    if (!doc["edges"].is_array()) {
        throw DataError("graph JSON: \"edges\" must be an array");
    }
    const int n = doc["n"].get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<Edge> previous;
    for (const Json &item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
            throw DataError(detail::concat("graph JSON: malformed edge ", item.dump()));
        }
        const Edge e{item[0].get<int>(), item[1].get<int>()};
        if (e.u >= e.v) {
            throw GraphError(Kind::non_canonical,
                             detail::concat("graph JSON: edge ", item.dump(), " is not written smaller endpoint first"));
        }
        if (previous && !(*previous < e)) {
            throw GraphError(Kind::non_canonical,
                             detail::concat("graph JSON: edge ", item.dump(), " breaks canonical ordering"));
        }
        previous = e;
        edges.emplace_back(e.u, e.v);
    }
    return build_graph(n, std::move(edges));
}

Json bounds_to_json(const CycBounds &b) {
    Json j{
        {"lower_pi", b.lower_pi},
        {"lower_universal", b.lower_universal},
        {"upper_tree", b.upper_tree},
        {"tree_from_construction", b.tree_from_construction},
        {"tree_edges", Json(b.tree)},
        {"cfs_interval", {b.cfs_interval.first, b.cfs_interval.second}},
        {"matthews_cover_upper", b.matthews_cover_upper},
    };
    if (b.exact) {
        j["exact"] = {{"value", b.exact->value}, {"order", b.exact->order}};
    } else {
        j["exact"] = nullptr;
    }
    return j;
}

Json analysis_to_json(const ChainAnalysis<double> &a, double foster_residual, const CycBounds &bounds) {
    return Json{
        {"pi", vector_to_json(a.pi)},
        {"total_conductance", a.total_conductance},
        {"foster_residual", foster_residual},
        {"hitting", matrix_to_json(a.hitting)},
        {"return_time", vector_to_json(a.return_time)},
        {"commute", matrix_to_json(a.commute)},
        {"edge_R", vector_to_json(a.resistance.edge.values)},
        {"bounds", bounds_to_json(bounds)},
    };
}

Json tree_to_json(const Graph &graph, const SpanningTreeResult &tree) {
    return Json{
        {"alpha", tree.alpha.str()},
        {"edges", edge_pairs(graph, tree.edges)},
        {"costs", {{"step1", tree.cost_step1}, {"step2", tree.cost_step2}, {"step3", tree.cost_step3}}},
        {"total", tree.total_weight},
        {"bound", tree.certified_bound},
    };
}

Json cover_to_json(const CoverEstimate &e) {
    return Json{
        {"trials", e.trials},   {"mean", e.mean},       {"stderr", e.std_error}, {"ci95", {e.ci_low, e.ci_high}},
        {"start", e.start},     {"seed", e.seed},
    };
}

std::string scaling_csv(const ScalingResult &result) {
    std::ostringstream os;
    os.precision(17);
    os << kScalingCsvHeader << '\n';
    for (const ScalingRow &row : result.rows) {
        const CoverEstimate &e = row.estimate;
        os << family_name(row.family) << ',' << row.n << ',' << rule_name(row.rule) << ',' << e.start << ','
           << e.trials << ',' << e.seed << ',' << e.mean << ',' << e.std_error << ',' << e.ci_low << ','
           << e.ci_high << '\n';
    }
    return os.str();
}

std::vector<double> weights_from_json(const Json &doc, int num_edges) {
    const Json &values = doc.is_object() && doc.contains("weights") ? doc["weights"] : doc;
    if (!values.is_array()) {
        throw DataError("weights JSON must be an array or an object with a \"weights\" array");
    }
    std::vector<double> out;
    for (const Json &v : values) {
        if (!v.is_number()) {
            throw DataError(detail::concat("weights JSON: non-numeric entry ", v.dump()));
        }
        out.push_back(v.get<double>());
    }
    if (static_cast<int>(out.size()) != num_edges) {
        throw DataError(detail::concat("weights JSON has ", out.size(), " entries, graph has ", num_edges, " edges"));
    }
    return out;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(detail::concat("cannot read ", path.string()));
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json read_json_file(const std::filesystem::path &path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error &e) {
        throw DataError(detail::concat("invalid JSON in ", path.string(), ": ", e.what()));
    }
}

void write_file_atomic(const std::filesystem::path &path, const std::string &content) {
    std::filesystem::path tmp = path;
    tmp += detail::concat(".tmp.", ::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError(detail::concat("cannot write ", tmp.string()));
        }
        out << content;
        out.flush();
        if (!out) {
            throw DataError(detail::concat("write failed for ", tmp.string()));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw DataError(detail::concat("cannot move ", tmp.string(), " to ", path.string(), ": ", ec.message()));
    }
}

} // namespace walklab
