#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilation/convex_dilation.hpp"
#include "dilation/spanner_graph.hpp"

namespace dilation {

/// A lower-bound witness graph together with the values it is claimed to
/// attain.
struct NamedConstruction {
    std::string name;
    GeometricGraph graph;
    double claimed_stretch = 0.0;
    std::vector<VertexPair> claimed_witnesses;
    std::optional<std::size_t> degree_cap;
};

struct ConstructionCheck {
    bool plane = false;
    bool degree_ok = false;
    bool stretch_ok = false;
    bool witness_ok = false;
    DilationReport report;
    std::string plane_detail;

    [[nodiscard]] bool ok() const { return plane && degree_ok && stretch_ok && witness_ok; }
    [[nodiscard]] std::string describe() const;
};

/// Plane validity, degree cap, claimed stretch within `tolerance`, and the
/// reported witness pair being one of the claimed pairs.
ConstructionCheck verify(const NamedConstruction& c, double tolerance = 1e-12);

/// (2 sin(2 pi/23) + sin(8 pi/23)) / sin(11 pi/23).
double s23_optimum();
/// 1 + sqrt(3).
double degree3_bound();
/// 1 + sqrt((5 - sqrt 5) / 2).
double degree4_bound();

/// Frozen triangulation of S23 attaining s23_optimum().
ConvexTriangulation s23_triangulation();

/// The constructors below verify their frozen data and throw
/// std::logic_error if it no longer checks out.
NamedConstruction s23_witness();
NamedConstruction degree3_spanner13();
NamedConstruction degree4_spanner6();

/// Appends the collinear tail of extend_collinear() and wires it as a path
/// hanging off the base vertex nearest to the first tail point. Throws
/// std::invalid_argument when that vertex has no spare degree under the cap
/// or n is smaller than the base.
NamedConstruction extended_construction(const NamedConstruction& base, int n, double offset = 100.0);

struct FalsifyResult {
    double best_found = 0.0;
    GeometricGraph graph;
    std::uint64_t evaluations = 0;
    /// A graph strictly below target - 1e-9 was found.
    bool beat_target = false;
};

/// Randomized search over plane graphs on `points` with maximum degree at
/// most `degree_cap` that minimizes the stretch factor: randomized greedy
/// starts followed by edge-insertion moves that evict conflicting edges.
/// Stops after `budget` evaluations or as soon as the target is beaten.
FalsifyResult falsify_degree_bound(const PointSet& points, int degree_cap, double target, std::uint64_t budget,
                                   std::uint64_t seed);

}  // namespace dilation
