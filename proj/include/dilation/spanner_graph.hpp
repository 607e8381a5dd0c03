#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dilation/geometry.hpp"

namespace dilation {

using VertexPair = std::pair<std::size_t, std::size_t>;

/// Undirected edge stored with u < v.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    Edge() = default;
    Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    std::size_t vertex;
    double weight;
};

/// Straight-line graph on a point set, weights are Euclidean lengths.
/// Immutable once built.
class GeometricGraph {
public:
    GeometricGraph() = default;
    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints. Edges are kept sorted.
    GeometricGraph(PointSet vertices, std::vector<Edge> edges);

    [[nodiscard]] const PointSet& vertices() const { return vertices_; }
    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
    [[nodiscard]] std::span<const Neighbor> neighbors(std::size_t v) const { return adjacency_[v]; }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;

private:
    PointSet vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

struct PlaneViolation {
    enum class Kind { crossing, vertex_in_edge };
    Kind kind = Kind::crossing;
    Edge edge;
    Edge other;             // second edge, for crossings
    std::size_t vertex = 0;  // interior vertex, for vertex_in_edge
};

struct PlaneCheck {
    bool plane = true;
    std::optional<PlaneViolation> violation;

    explicit operator bool() const { return plane; }
    [[nodiscard]] std::string describe() const;
};

/// Checks that no two edges properly cross and that no edge passes through a
/// vertex. Reports the first violation in edge order.
PlaneCheck validate_plane(const GeometricGraph& graph);

struct ShortestPath {
    double length = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> path;  // empty when unreachable
};

/// Dijkstra; on equal tentative distances the smaller predecessor index wins.
/// Throws std::out_of_range for invalid indices.
ShortestPath shortest_path(const GeometricGraph& graph, std::size_t u, std::size_t v);

/// Single-source distances and predecessor array (npos for the source and
/// unreachable vertices).
struct ShortestPathTree {
    std::vector<double> distance;
    std::vector<std::size_t> predecessor;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    [[nodiscard]] std::vector<std::size_t> path_to(std::size_t target) const;
};
ShortestPathTree shortest_path_tree(const GeometricGraph& graph, std::size_t source);

struct DilationReport {
    double stretch = 1.0;
    std::optional<VertexPair> witness_pair;
    std::vector<std::size_t> witness_path;  // empty when the pair is disconnected
};

/// Maximum over unordered vertex pairs of graph distance over Euclidean
/// distance. Ties go to the lexicographically smallest pair. Disconnected
/// graphs report +infinity with the first disconnected pair.
/// Requires at least two vertices.
DilationReport stretch_factor(const GeometricGraph& graph, int workers = 1);

std::size_t max_degree(const GeometricGraph& graph);

}  // namespace dilation
