#pragma once

#include <string>

#include <json.hpp>

#include "dilation/spanner_graph.hpp"

namespace dilation {

/// `{ "points": [[x,y],...], "edges": [[i,j],...] }`
nlohmann::json graph_to_json(const GeometricGraph& graph);
GeometricGraph graph_from_json(const nlohmann::json& j);
GeometricGraph read_graph_json_file(const std::string& path);

/// `{ "stretch": r, "pair": [i,j], "path": [...] }`; an infinite stretch is
/// written as the string "inf", absent witnesses as null.
nlohmann::json report_to_json(const DilationReport& report);
DilationReport report_from_json(const nlohmann::json& j);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace dilation
