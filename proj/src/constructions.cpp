#include "dilation/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "constructions_data.hpp"

namespace dilation {

std::string ConstructionCheck::describe() const {
    std::ostringstream out;
    out.precision(12);
    out << "plane=" << (plane ? "yes" : "no") << " degree=" << (degree_ok ? "ok" : "violated")
        << " stretch=" << report.stretch << (stretch_ok ? "" : " (mismatch)");
    if (report.witness_pair) {
        out << " witness=(" << report.witness_pair->first << "," << report.witness_pair->second << ")"
            << (witness_ok ? "" : " (unexpected)");
    }
    if (!plane) out << " [" << plane_detail << "]";
    return out.str();
}

ConstructionCheck verify(const NamedConstruction& c, double tolerance) {
    ConstructionCheck check;
    const PlaneCheck pc = validate_plane(c.graph);
    check.plane = pc.plane;
    if (!pc.plane) check.plane_detail = pc.describe();
    check.degree_ok = !c.degree_cap || max_degree(c.graph) <= *c.degree_cap;
    check.report = stretch_factor(c.graph);
    check.stretch_ok = std::abs(check.report.stretch - c.claimed_stretch) <= tolerance;
    check.witness_ok = check.report.witness_pair &&
                       std::find(c.claimed_witnesses.begin(), c.claimed_witnesses.end(), *check.report.witness_pair) !=
                           c.claimed_witnesses.end();
    return check;
}

double s23_optimum() {
    constexpr double pi = std::numbers::pi;
    return (2.0 * std::sin(2.0 * pi / 23.0) + std::sin(8.0 * pi / 23.0)) / std::sin(11.0 * pi / 23.0);
}

double degree3_bound() { return 1.0 + std::sqrt(3.0); }

double degree4_bound() { return 1.0 + std::sqrt((5.0 - std::sqrt(5.0)) / 2.0); }

namespace {

NamedConstruction checked(NamedConstruction c) {
    const ConstructionCheck check = verify(c);
    if (!check.ok()) throw std::logic_error(c.name + " failed verification: " + check.describe());
    return c;
}

std::vector<Edge> to_edges(std::span<const std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    return edges;
}

}  // namespace

ConvexTriangulation s23_triangulation() { return ConvexTriangulation(23, to_edges(data::kS23Diagonals)); }

NamedConstruction s23_witness() {
    return checked({"s23", realize(s23_triangulation()), s23_optimum(), {{10, 21}, {6, 18}}, std::nullopt});
}

NamedConstruction degree3_spanner13() {
    return checked({"deg3", GeometricGraph(hex13(), to_edges(data::kHex13Degree3Edges)), degree3_bound(),
                    {{1, 3}, {5, 7}, {9, 11}}, 3});
}

NamedConstruction degree4_spanner6() {
    std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    return checked({"deg4", GeometricGraph(pentagon6(), std::move(edges)), degree4_bound(), {{0, 1}}, 4});
}

NamedConstruction extended_construction(const NamedConstruction& base, int n, double offset) {
    const PointSet& pts = base.graph.vertices();
    const std::size_t m = pts.size();
    if (n < 0 || static_cast<std::size_t>(n) < m) {
        throw std::invalid_argument("extended_construction: n is smaller than the base");
    }
    if (static_cast<std::size_t>(n) == m) return base;

    PointSet extended = extend_collinear(pts, n, offset);
    const Point first = extended[m];
    std::size_t anchor = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < m; ++v) {
        const double d = distance(pts[v], first);
        if (d < best) {
            best = d;
            anchor = v;
        }
    }
    if (base.degree_cap && base.graph.degree(anchor) >= *base.degree_cap) {
        throw std::invalid_argument("extended_construction: attachment vertex " + std::to_string(anchor) +
                                    " has no spare degree");
    }

    std::vector<Edge> edges(base.graph.edges().begin(), base.graph.edges().end());
    edges.emplace_back(anchor, m);
    for (std::size_t v = m + 1; v < static_cast<std::size_t>(n); ++v) edges.emplace_back(v - 1, v);

    NamedConstruction out = base;
    out.name = base.name + "-n" + std::to_string(n);
    out.graph = GeometricGraph(std::move(extended), std::move(edges));
    return out;
}

}  // namespace dilation
