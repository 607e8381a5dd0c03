#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dilation/spanner_graph.hpp"

namespace dilation {

/// Cyclic index distance min(|i-j|, n-|i-j|) between vertices of an n-gon.
int hull_length(int n, int i, int j);

/// Hull lengths of a detour: the separated pair spans `lambda`, the path
/// edges span `hops`.
struct ChordProfile {
    int n = 0;
    int lambda = 0;
    std::vector<int> hops;
};

/// sum_h sin(hops_h * pi / n) / sin(lambda * pi / n).
double chord_ratio(const ChordProfile& profile);

/// Chord lengths 2 sin(m pi / n) of the unit-circumradius n-gon for
/// m = 0 .. floor(n/2).
class ChordTable {
public:
    explicit ChordTable(int n);
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] double by_hull_length(int m) const { return lengths_[static_cast<std::size_t>(m)]; }
    [[nodiscard]] double chord(int i, int j) const { return lengths_[static_cast<std::size_t>(hull_length(n_, i, j))]; }

private:
    int n_;
    std::vector<double> lengths_;
};

/// Triangulation of the convex n-gon, stored as its sorted diagonal list.
/// Hull edges (i, i+1 mod n) are implicit.
class ConvexTriangulation {
public:
    ConvexTriangulation() = default;
    /// Throws std::invalid_argument unless the diagonals form a triangulation.
    ConvexTriangulation(int n, std::vector<Edge> diagonals);

    /// All diagonals incident to `apex`.
    static ConvexTriangulation fan(int n, int apex = 0);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::span<const Edge> diagonals() const { return diagonals_; }
    /// Hull edges followed by diagonals.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const ConvexTriangulation&, const ConvexTriangulation&) = default;
    /// Lexicographic on the sorted diagonal lists.
    friend bool operator<(const ConvexTriangulation& a, const ConvexTriangulation& b) {
        return a.diagonals_ < b.diagonals_;
    }

    /// Sorts but does not validate; for callers that build triangulations
    /// by construction.
    static ConvexTriangulation unchecked(int n, std::vector<Edge> diagonals);

private:
    int n_ = 0;
    std::vector<Edge> diagonals_;
};

/// True iff diagonals (a,b), (c,d) of a convex polygon cross.
bool diagonals_cross(Edge a, Edge b);

/// The triangulation as a geometric graph on regular_ngon(n, 1).
GeometricGraph realize(const ConvexTriangulation& t);

/// Stretch factor of the realized triangulation, computed from the chord
/// table. Ties go to the lexicographically smallest pair.
DilationReport triangulation_stretch(const ConvexTriangulation& t);

/// Largest hull length over all edges.
int longest_chord(const ConvexTriangulation& t);

/// Seeded recursive random splitting: the triangle on each pending base
/// chord gets a uniformly chosen apex. Not uniform over triangulations.
ConvexTriangulation random_triangulation(int n, std::uint64_t seed);

/// Visits every triangulation of the convex n-gon once. Returns the count.
std::uint64_t enumerate_triangulations(int n, const std::function<void(const ConvexTriangulation&)>& visitor = {});

struct EnumerationOptions {
    bool prune = false;
    int workers = 1;
    /// Report whether some triangulation lies below threshold - 1e-9.
    std::optional<double> threshold;
    /// Keep the second distinct stretch value; pruning then compares against
    /// it instead of the best value.
    bool track_second_best = true;
};

struct EnumerationResult {
    std::uint64_t count = 0;
    double min_stretch = 0.0;
    ConvexTriangulation argmin;
    std::uint64_t pruned_subtrees = 0;
    /// Smallest stretch exceeding min_stretch + 1e-9.
    std::optional<double> second_best;
    std::optional<bool> below_threshold;
};

/// Margin that separates distinct stretch values.
inline constexpr double kDistinctStretchMargin = 1e-9;

/// Exact minimum stretch over all triangulations of the regular n-gon.
/// Pruning and the worker count never change min_stretch or argmin.
EnumerationResult min_dilation_convex(int n, const EnumerationOptions& options = {});

struct LocalSearchResult {
    double stretch = 0.0;
    ConvexTriangulation triangulation;
    std::uint64_t evaluations = 0;
};

/// Seeded edge-flip descent with perturbation restarts. `budget` bounds the
/// number of stretch evaluations. The result is the stretch of an actual
/// triangulation, so it bounds the minimum from above.
LocalSearchResult local_search_min_dilation(int n, std::uint64_t budget, std::uint64_t seed);

/// C_k = binom(2k, k) / (k + 1); exact for k <= 33.
std::uint64_t catalan(int k);

namespace detail {

/// All-pairs shortest paths over an n x n row-major matrix, in place.
void floyd_warshall(std::vector<double>& dist, int n);

/// Max of dist(i,j) / chord(i,j); returns the first maximal pair through
/// `pair` when non-null.
double max_ratio(const std::vector<double>& dist, const ChordTable& table, VertexPair* pair = nullptr);

/// Distance matrix of the triangulation's edges (unreached pairs infinite).
std::vector<double> edge_matrix(int n, std::span<const Edge> diagonals, const ChordTable& table);

}  // namespace detail

}  // namespace dilation
