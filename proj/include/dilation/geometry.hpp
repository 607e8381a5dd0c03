#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dilation {

/// Sine-of-smallest-angle threshold below which three points count as collinear.
inline constexpr double kCollinearTolerance = 1e-9;
/// Minimum Euclidean separation between distinct points of a PointSet.
inline constexpr double kSeparationTolerance = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

enum class Orientation { clockwise = -1, collinear = 0, counterclockwise = 1 };

/// Turn direction of p -> q -> r.
///
/// The decision is made on the sine of the triangle's smallest angle, so the
/// answer is invariant (up to sign) under any permutation of the arguments.
/// Degenerate triangles with coincident corners are collinear.
Orientation orientation(Point p, Point q, Point r);

/// True iff the open segments ab and cd have a common point.
/// Touching at a shared endpoint is not a crossing; a collinear overlap of
/// positive length is.
bool segments_properly_cross(Point a, Point b, Point c, Point d);

/// True iff p lies on segment ab strictly between its endpoints.
bool point_in_segment_interior(Point p, Point a, Point b);

/// Ordered list of distinct, finite points. Indices are stable identifiers.
class PointSet {
public:
    PointSet() = default;
    /// Throws std::invalid_argument on non-finite coordinates or points closer
    /// than kSeparationTolerance.
    explicit PointSet(std::vector<Point> points, std::optional<std::string> label = std::nullopt);

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] bool empty() const { return points_.empty(); }
    [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] const Point& at(std::size_t i) const { return points_.at(i); }
    [[nodiscard]] std::span<const Point> points() const { return points_; }
    [[nodiscard]] const std::optional<std::string>& label() const { return label_; }

    [[nodiscard]] auto begin() const { return points_.begin(); }
    [[nodiscard]] auto end() const { return points_.end(); }

    [[nodiscard]] double distance(std::size_t i, std::size_t j) const {
        return dilation::distance(points_[i], points_[j]);
    }

    /// Subset in the given index order.
    [[nodiscard]] PointSet subset(std::span<const std::size_t> indices) const;

private:
    std::vector<Point> points_;
    std::optional<std::string> label_;
};

/// Vertices of a regular n-gon centred at the origin, counterclockwise,
/// point 0 at angle pi/2.
PointSet regular_ngon(int n, double circumradius = 1.0);

/// Centre p0, unit hexagon P1 = {p1,p3,...,p11}, radius-2 hexagon
/// P2 = {p2,p4,...,p12} with p_{2k} = 2 p_{2k-1}; p3 = (1,0).
/// Coordinates are exact multiples of 1/2 and sqrt(3)/2.
PointSet hex13();

/// Centre p0 = (0,0) and the unit regular pentagon p1..p5 (p1 at angle pi/2).
PointSet pentagon6();

/// Appends (offset + i, 0) for i = |base| .. n-1. Requires n >= |base| and
/// offset >= 100.
PointSet extend_collinear(const PointSet& base, int n, double offset = 100.0);

/// Parses `x,y` lines; blank and `#` lines are skipped.
PointSet read_point_csv(std::istream& in);
PointSet read_point_csv_file(const std::string& path);
void write_point_csv(std::ostream& out, const PointSet& points);

}  // namespace dilation
