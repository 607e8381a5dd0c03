#include "dilation/geometry.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dilation {

namespace {

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

Orientation orientation(Point p, Point q, Point r) {
    // Evaluate the cross product on a canonical ordering so that permuting the
    // arguments flips the sign exactly instead of changing rounding.
    std::array<Point, 3> v{p, q, r};
    int parity = 1;
    if (lex_less(v[1], v[0])) { std::swap(v[0], v[1]); parity = -parity; }
    if (lex_less(v[2], v[1])) { std::swap(v[1], v[2]); parity = -parity; }
    if (lex_less(v[1], v[0])) { std::swap(v[0], v[1]); parity = -parity; }

    const Point e1 = v[1] - v[0];
    const Point e2 = v[2] - v[0];
    const double area2 = cross(e1, e2);

    std::array<double, 3> sides{norm(e1), norm(e2), distance(v[1], v[2])};
    std::sort(sides.begin(), sides.end());
    const double scale = sides[1] * sides[2];
    if (scale == 0.0 || std::abs(area2) <= kCollinearTolerance * scale) {
        return Orientation::collinear;
    }
    return (area2 > 0) == (parity > 0) ? Orientation::counterclockwise : Orientation::clockwise;
}

bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    const Orientation o1 = orientation(a, b, c);
    const Orientation o2 = orientation(a, b, d);
    const Orientation o3 = orientation(c, d, a);
    const Orientation o4 = orientation(c, d, b);

    if (o1 == Orientation::collinear && o2 == Orientation::collinear) {
        // Same supporting line: positive-length overlap of the parameter ranges.
        const Point dir = b - a;
        const double len2 = dot(dir, dir);
        if (len2 == 0.0) return false;
        const double tc = dot(c - a, dir) / len2;
        const double td = dot(d - a, dir) / len2;
        const double lo = std::max(0.0, std::min(tc, td));
        const double hi = std::min(1.0, std::max(tc, td));
        return (hi - lo) * std::sqrt(len2) > kSeparationTolerance;
    }
    if (o1 == Orientation::collinear || o2 == Orientation::collinear ||
        o3 == Orientation::collinear || o4 == Orientation::collinear) {
        // The supporting lines meet in an endpoint, which no open segment contains.
        return false;
    }
    return o1 != o2 && o3 != o4;
}

bool point_in_segment_interior(Point p, Point a, Point b) {
    if (orientation(a, b, p) != Orientation::collinear) return false;
    const Point dir = b - a;
    const double len = norm(dir);
    if (len == 0.0) return false;
    const double along = dot(p - a, dir) / len;
    return along > kSeparationTolerance && along < len - kSeparationTolerance;
}

PointSet::PointSet(std::vector<Point> points, std::optional<std::string> label)
    : points_(std::move(points)), label_(std::move(label)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
    // Sweep in x so the distinctness check is near-linear for spread-out inputs.
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return points_[i].x < points_[j].x; });
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Point& p = points_[order[a]];
            const Point& q = points_[order[b]];
            if (q.x - p.x > kSeparationTolerance) break;
            if (dilation::distance(p, q) <= kSeparationTolerance) {
                throw std::invalid_argument("points " + std::to_string(std::min(order[a], order[b])) +
                                            " and " + std::to_string(std::max(order[a], order[b])) +
                                            " coincide");
            }
        }
    }
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
    std::vector<Point> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(points_.at(i));
    return PointSet(std::move(out));
}

PointSet regular_ngon(int n, double circumradius) {
    if (n < 3) throw std::invalid_argument("regular_ngon needs n >= 3");
    if (!(circumradius > 0.0)) throw std::invalid_argument("regular_ngon needs a positive circumradius");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = std::numbers::pi / 2 + 2.0 * std::numbers::pi * i / n;
        pts.push_back({circumradius * std::cos(theta), circumradius * std::sin(theta)});
    }
    return PointSet(std::move(pts), "S" + std::to_string(n));
}

PointSet hex13() {
    const double h = std::numbers::sqrt3 / 2.0;
    // Unit hexagon in angular order -60, 0, 60, 120, 180, 240 degrees.
    const std::array<Point, 6> inner{{{0.5, -h}, {1.0, 0.0}, {0.5, h}, {-0.5, h}, {-1.0, 0.0}, {-0.5, -h}}};
    std::vector<Point> pts;
    pts.reserve(13);
    pts.push_back({0.0, 0.0});
    for (const Point& u : inner) {
        pts.push_back(u);
        pts.push_back(2.0 * u);
    }
    return PointSet(std::move(pts), "hex13");
}

PointSet pentagon6() {
    const PointSet ring = regular_ngon(5, 1.0);
    std::vector<Point> pts{{0.0, 0.0}};
    pts.insert(pts.end(), ring.begin(), ring.end());
    return PointSet(std::move(pts), "pentagon6");
}

PointSet extend_collinear(const PointSet& base, int n, double offset) {
    if (n < 0 || static_cast<std::size_t>(n) < base.size()) {
        throw std::invalid_argument("extend_collinear: n is smaller than the base set");
    }
    if (!(offset >= 100.0)) throw std::invalid_argument("extend_collinear: offset must be at least 100");
    std::vector<Point> pts(base.begin(), base.end());
    for (int i = static_cast<int>(base.size()); i < n; ++i) {
        pts.push_back({offset + i, 0.0});
    }
    return PointSet(std::move(pts), base.label());
}

}  // namespace dilation
