#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilation/spanner_graph.hpp"

namespace dilation {

struct SvgStyle {
    double width = 640.0;  // pixels; height follows the aspect ratio
    bool vertex_labels = true;
};

/// Vertices, edges, and each report's witness path drawn in its own colour
/// (blue, red, then green, ...) with its witness pair labelled. Output is a
/// pure function of the inputs.
std::string svg_document(const GeometricGraph& graph, const std::vector<DilationReport>& highlights = {},
                         const SvgStyle& style = {});

/// Writes svg_document(graph, {report}) to `path`. Throws std::runtime_error
/// when the file cannot be written.
void render_svg(const GeometricGraph& graph, const std::optional<DilationReport>& report, const std::string& path);
void render_svg(const GeometricGraph& graph, const std::vector<DilationReport>& highlights, const std::string& path);

}  // namespace dilation
