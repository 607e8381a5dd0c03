#include "dilation/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace dilation {

namespace {

constexpr std::array<const char*, 5> kPalette{"#1f4fd8", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

// Fixed-precision formatting keeps the bytes independent of locale and of
// iostream state.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Frame {
    double min_x, max_y, scale, margin;

    [[nodiscard]] double x(const Point& p) const { return margin + (p.x - min_x) * scale; }
    [[nodiscard]] double y(const Point& p) const { return margin + (max_y - p.y) * scale; }
};

}  // namespace

std::string svg_document(const GeometricGraph& graph, const std::vector<DilationReport>& highlights,
                         const SvgStyle& style) {
    const PointSet& pts = graph.vertices();
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (!pts.empty()) {
        min_x = min_y = std::numeric_limits<double>::infinity();
        max_x = max_y = -std::numeric_limits<double>::infinity();
        for (const Point& p : pts) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double margin = 24.0;
    const double scale = (style.width - 2 * margin) / std::max(span_x, span_y);
    const Frame f{min_x, max_y, scale, margin};
    const double width = 2 * margin + span_x * scale;
    const double height = 2 * margin + span_y * scale;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out += "<g id=\"edges\" stroke=\"#555555\" stroke-width=\"1.2\">\n";
    for (const Edge& e : graph.edges()) {
        out += "<line x1=\"" + num(f.x(pts[e.u])) + "\" y1=\"" + num(f.y(pts[e.u])) + "\" x2=\"" + num(f.x(pts[e.v])) +
               "\" y2=\"" + num(f.y(pts[e.v])) + "\"/>\n";
    }
    out += "</g>\n";

    for (std::size_t h = 0; h < highlights.size(); ++h) {
        const DilationReport& r = highlights[h];
        const char* colour = kPalette[h % kPalette.size()];
        out += "<g id=\"witness-" + std::to_string(h) + "\" stroke=\"" + colour +
               "\" stroke-width=\"3\" fill=\"none\">\n";
        if (r.witness_path.size() >= 2) {
            out += "<polyline points=\"";
            for (std::size_t k = 0; k < r.witness_path.size(); ++k) {
                const Point& p = pts[r.witness_path[k]];
                if (k) out += ' ';
                out += num(f.x(p)) + "," + num(f.y(p));
            }
            out += "\"/>\n";
        }
        if (r.witness_pair) {
            for (std::size_t v : {r.witness_pair->first, r.witness_pair->second}) {
                out += "<circle cx=\"" + num(f.x(pts[v])) + "\" cy=\"" + num(f.y(pts[v])) + "\" r=\"7\"/>\n";
            }
            const Point& a = pts[r.witness_pair->first];
            out += "<text x=\"" + num(f.x(a) + 9) + "\" y=\"" + num(f.y(a) + 16 + 12.0 * static_cast<double>(h)) +
                   "\" fill=\"" + colour + "\" stroke=\"none\" font-family=\"sans-serif\" font-size=\"11\">(" +
                   std::to_string(r.witness_pair->first) + "," + std::to_string(r.witness_pair->second) + ") " +
                   num(r.stretch) + "</text>\n";
        }
        out += "</g>\n";
    }

    out += "<g id=\"vertices\" fill=\"black\">\n";
    for (std::size_t v = 0; v < pts.size(); ++v) {
        out += "<circle cx=\"" + num(f.x(pts[v])) + "\" cy=\"" + num(f.y(pts[v])) + "\" r=\"3\"/>\n";
    }
    out += "</g>\n";
    if (style.vertex_labels) {
        out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#222222\">\n";
        for (std::size_t v = 0; v < pts.size(); ++v) {
            out += "<text x=\"" + num(f.x(pts[v]) + 4) + "\" y=\"" + num(f.y(pts[v]) - 4) + "\">" + std::to_string(v) +
                   "</text>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void render_svg(const GeometricGraph& graph, const std::vector<DilationReport>& highlights, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << svg_document(graph, highlights);
    if (!file) throw std::runtime_error("error writing " + path);
}

void render_svg(const GeometricGraph& graph, const std::optional<DilationReport>& report, const std::string& path) {
    std::vector<DilationReport> highlights;
    if (report) highlights.push_back(*report);
    render_svg(graph, highlights, path);
}

}  // namespace dilation
