#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dilation/spanner_graph.hpp"

namespace dilation {

/// All pairs sorted by (length, smaller index, larger index); a pair is
/// accepted iff no point lies in its interior and it crosses no accepted
/// edge. Throws std::invalid_argument for fewer than three points.
GeometricGraph greedy_triangulation(const PointSet& points);

/// True iff the greedy result cannot depend on how ties are broken: no two
/// candidate pairs whose lengths agree to `relative_tolerance` cross.
bool greedy_is_tie_free(const PointSet& points, double relative_tolerance = 1e-12);

/// Parallelogram with two horizontal unit sides at y = 0 and y = 1, lower
/// left angle alpha, plus two points at distance epsilon below and above it
/// on the vertical line through its centre.
struct GreedyParams {
    double alpha = 0.0;
    double epsilon = 0.0;

    /// Throws std::invalid_argument unless pi/4 < alpha < pi/2 and
    /// 0 < epsilon <= 1e-2.
    void validate() const;
};

/// p0 bottom exterior point, p1 = (1,0), p2 = (1+c,1), p3 top exterior
/// point, p4 = (c,1), p5 = (0,0), with c = cot(alpha).
PointSet parallelogram_six(const GreedyParams& params);

struct GreedyQuantities {
    double a = 0.0;  // slanted side
    double b = 0.0;  // short diagonal
    double x = 0.0;  // horizontal offset of the centre from the upper left corner
};

/// Requires alpha in (pi/4, pi/2]; the closed end is the unit square.
GreedyQuantities derived_quantities(double alpha);

/// min(1 + a, 2x + b).
double greedy_bound(double alpha);

struct GreedyOptimum {
    double alpha_star = 0.0;
    double value = 0.0;
};

/// Grid scan over (pi/4, pi/2) followed by golden-section refinement until the
/// bracket is narrower than `tol`.
GreedyOptimum maximize_greedy_bound(double tol = 1e-9);

struct ExperimentRecord {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double stretch = 1.0;
    VertexPair witness_pair{0, 0};
};

struct ExperimentSummary {
    double max_stretch = 0.0;
    /// Index into the record list.
    std::size_t argmax = 0;
    double histogram_start = 1.0;
    double histogram_width = 0.05;
    std::vector<std::uint64_t> histogram;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;  // ordered by (n, trial)
    ExperimentSummary summary;
    std::string rng;
};

/// Uniform points in the unit square, point set seeded by
/// derive_seed(seed, (n - n_min) * trials + trial). Results do not depend on
/// the worker count.
ExperimentResult greedy_stretch_experiment(int n_min, int n_max, int trials, std::uint64_t seed, int workers = 1);

/// `n` uniform points in the unit square.
PointSet uniform_points(int n, std::uint64_t seed);

/// True iff every point is a strict vertex of the convex hull.
bool in_convex_position(const PointSet& points);

struct ConvexSubsetResult {
    double best = 0.0;
    std::vector<std::size_t> subset;
};

/// Maximum greedy stretch over all subsets of size >= 3 in convex position.
/// Ties keep the subset with the smallest bitmask. At most 16 points.
ConvexSubsetResult convex_subset_greedy_max(const PointSet& points);

}  // namespace dilation
