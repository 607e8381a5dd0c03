#include "dilation/spanner_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "dilation/parallel.hpp"

namespace dilation {

GeometricGraph::GeometricGraph(PointSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const std::size_t n = vertices_.size();
    for (const Edge& e : edges_) {
        if (e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    adjacency_.assign(n, {});
    for (const Edge& e : edges_) {
        const double w = vertices_.distance(e.u, e.v);
        adjacency_[e.u].push_back({e.v, w});
        adjacency_[e.v].push_back({e.u, w});
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

bool GeometricGraph::has_edge(std::size_t a, std::size_t b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::string PlaneCheck::describe() const {
    if (plane || !violation) return "plane";
    std::ostringstream os;
    const auto& v = *violation;
    if (v.kind == PlaneViolation::Kind::crossing) {
        os << "edges (" << v.edge.u << "," << v.edge.v << ") and (" << v.other.u << "," << v.other.v << ") cross";
    } else {
        os << "vertex " << v.vertex << " lies inside edge (" << v.edge.u << "," << v.edge.v << ")";
    }
    return os.str();
}

PlaneCheck validate_plane(const GeometricGraph& graph) {
    const PointSet& pts = graph.vertices();
    const auto edges = graph.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
        const Edge& e = edges[a];
        for (std::size_t w = 0; w < pts.size(); ++w) {
            if (w == e.u || w == e.v) continue;
            if (point_in_segment_interior(pts[w], pts[e.u], pts[e.v])) {
                return {false, PlaneViolation{PlaneViolation::Kind::vertex_in_edge, e, {}, w}};
            }
        }
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const Edge& f = edges[b];
            if (segments_properly_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v])) {
                return {false, PlaneViolation{PlaneViolation::Kind::crossing, e, f, 0}};
            }
        }
    }
    return {};
}

std::vector<std::size_t> ShortestPathTree::path_to(std::size_t target) const {
    if (target >= distance.size() || distance[target] == std::numeric_limits<double>::infinity()) return {};
    std::vector<std::size_t> path{target};
    while (predecessor[path.back()] != npos) path.push_back(predecessor[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

ShortestPathTree shortest_path_tree(const GeometricGraph& graph, std::size_t source) {
    const std::size_t n = graph.vertex_count();
    if (source >= n) throw std::out_of_range("source vertex out of range");
    ShortestPathTree tree{std::vector<double>(n, std::numeric_limits<double>::infinity()),
                          std::vector<std::size_t>(n, ShortestPathTree::npos)};
    std::vector<bool> settled(n, false);
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    tree.distance[source] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;
        settled[u] = true;
        for (const Neighbor& nb : graph.neighbors(u)) {
            if (settled[nb.vertex]) continue;
            const double nd = d + nb.weight;
            double& cur = tree.distance[nb.vertex];
            if (nd < cur) {
                cur = nd;
                tree.predecessor[nb.vertex] = u;
                queue.push({nd, nb.vertex});
            } else if (nd == cur && u < tree.predecessor[nb.vertex]) {
                tree.predecessor[nb.vertex] = u;
            }
        }
    }
    return tree;
}

ShortestPath shortest_path(const GeometricGraph& graph, std::size_t u, std::size_t v) {
    if (u >= graph.vertex_count() || v >= graph.vertex_count()) throw std::out_of_range("vertex index out of range");
    const ShortestPathTree tree = shortest_path_tree(graph, u);
    return {tree.distance[v], tree.path_to(v)};
}

DilationReport stretch_factor(const GeometricGraph& graph, int workers) {
    const std::size_t n = graph.vertex_count();
    if (n < 2) throw std::invalid_argument("stretch_factor needs at least two vertices");

    struct SourceBest {
        double ratio = -1.0;
        std::size_t target = 0;
    };
    std::vector<SourceBest> best(n - 1);
    const PointSet& pts = graph.vertices();
    parallel_for(n - 1, workers, [&](std::size_t i) {
        const ShortestPathTree tree = shortest_path_tree(graph, i);
        SourceBest b;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double ratio = tree.distance[j] / pts.distance(i, j);
            if (ratio > b.ratio) b = {ratio, j};
        }
        best[i] = b;
    });

    std::size_t src = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (best[i].ratio > best[src].ratio) src = i;
    }
    DilationReport report;
    report.stretch = best[src].ratio;
    report.witness_pair = VertexPair{src, best[src].target};
    report.witness_path = shortest_path_tree(graph, src).path_to(best[src].target);
    return report;
}

std::size_t max_degree(const GeometricGraph& graph) {
    std::size_t d = 0;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) d = std::max(d, graph.degree(v));
    return d;
}

}  // namespace dilation
