#include <cmath>
#include <limits>
#include <fstream>
#include <stdexcept>

#include "dilation/json_io.hpp"

namespace dilation {

using nlohmann::json;

json graph_to_json(const GeometricGraph& graph) {
    json points = json::array();
    for (const Point& p : graph.vertices()) points.push_back({p.x, p.y});
    json edges = json::array();
    for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
    return {{"points", std::move(points)}, {"edges", std::move(edges)}};
}

GeometricGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"points\" and \"edges\"");
    }
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each point must be [x, y]");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be [i, j]");
        const auto a = e[0].get<long long>();
        const auto b = e[1].get<long long>();
        if (a < 0 || b < 0) throw std::invalid_argument("negative vertex index");
        edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    return GeometricGraph(PointSet(std::move(pts)), std::move(edges));
}

GeometricGraph read_graph_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return graph_from_json(json::parse(in));
}

json report_to_json(const DilationReport& report) {
    json j;
    if (std::isfinite(report.stretch)) {
        j["stretch"] = report.stretch;
    } else {
        j["stretch"] = "inf";
    }
    j["pair"] = report.witness_pair ? json{report.witness_pair->first, report.witness_pair->second} : json(nullptr);
    j["path"] = report.witness_path.empty() ? json(nullptr) : json(report.witness_path);
    return j;
}

DilationReport report_from_json(const json& j) {
    DilationReport r;
    const auto& s = j.at("stretch");
    r.stretch = s.is_string() ? std::numeric_limits<double>::infinity() : s.get<double>();
    if (!j.at("pair").is_null()) {
        r.witness_pair = VertexPair{j["pair"][0].get<std::size_t>(), j["pair"][1].get<std::size_t>()};
    }
    if (!j.at("path").is_null()) r.witness_path = j["path"].get<std::vector<std::size_t>>();
    return r;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace dilation
