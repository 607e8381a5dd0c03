#include "dilation/greedy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "dilation/parallel.hpp"
#include "dilation/random.hpp"

namespace dilation {

namespace {

struct Candidate {
    double length;
    std::size_t i;
    std::size_t j;
};

// Pairs with no point in their interior, sorted by (length, i, j).
std::vector<Candidate> candidate_pairs(const PointSet& pts) {
    const std::size_t n = pts.size();
    std::vector<Candidate> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool blocked = false;
            for (std::size_t k = 0; k < n && !blocked; ++k) {
                blocked = k != i && k != j && point_in_segment_interior(pts[k], pts[i], pts[j]);
            }
            if (!blocked) out.push_back({pts.distance(i, j), i, j});
        }
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.length, a.i, a.j) < std::tie(b.length, b.i, b.j);
    });
    return out;
}

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

GeometricGraph greedy_triangulation(const PointSet& points) {
    if (points.size() < 3) throw std::invalid_argument("greedy_triangulation needs at least three points");
    std::vector<Edge> accepted;
    for (const Candidate& c : candidate_pairs(points)) {
        const Point a = points[c.i];
        const Point b = points[c.j];
        const bool crosses = std::any_of(accepted.begin(), accepted.end(), [&](const Edge& e) {
            return segments_properly_cross(a, b, points[e.u], points[e.v]);
        });
        if (!crosses) accepted.emplace_back(c.i, c.j);
    }
    return GeometricGraph(points, std::move(accepted));
}

bool greedy_is_tie_free(const PointSet& points, double relative_tolerance) {
    const std::vector<Candidate> cands = candidate_pairs(points);
    for (std::size_t s = 0; s < cands.size(); ++s) {
        for (std::size_t t = s + 1; t < cands.size(); ++t) {
            if (cands[t].length - cands[s].length > relative_tolerance * cands[t].length) break;
            if (segments_properly_cross(points[cands[s].i], points[cands[s].j], points[cands[t].i],
                                        points[cands[t].j])) {
                return false;
            }
        }
    }
    return true;
}

void GreedyParams::validate() const {
    if (!(alpha > kQuarterPi && alpha < kHalfPi)) throw std::invalid_argument("alpha must lie in (pi/4, pi/2)");
    if (!(epsilon > 0.0 && epsilon <= 1e-2)) throw std::invalid_argument("epsilon must lie in (0, 1e-2]");
}

PointSet parallelogram_six(const GreedyParams& params) {
    params.validate();
    const double c = 1.0 / std::tan(params.alpha);
    const double cx = (1.0 + c) / 2.0;
    return PointSet({{cx, -params.epsilon}, {1.0, 0.0}, {1.0 + c, 1.0}, {cx, 1.0 + params.epsilon}, {c, 1.0}, {0.0, 0.0}},
                    "parallelogram6");
}

GreedyQuantities derived_quantities(double alpha) {
    if (!(alpha > kQuarterPi && alpha <= kHalfPi)) throw std::invalid_argument("alpha must lie in (pi/4, pi/2]");
    const double s = std::sin(alpha);
    const double c = std::cos(alpha);
    return {1.0 / s, std::sqrt(1.0 + s * s - 2.0 * s * c) / s, (1.0 - c / s) / 2.0};
}

double greedy_bound(double alpha) {
    const GreedyQuantities q = derived_quantities(alpha);
    return std::min(1.0 + q.a, 2.0 * q.x + q.b);
}

GreedyOptimum maximize_greedy_bound(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("maximize_greedy_bound needs tol > 0");
    constexpr int kGrid = 1000;
    const double step = (kHalfPi - kQuarterPi) / kGrid;
    int best = 1;
    for (int k = 2; k < kGrid; ++k) {
        if (greedy_bound(kQuarterPi + k * step) > greedy_bound(kQuarterPi + best * step)) best = k;
    }
    double lo = kQuarterPi + (best - 1) * step;
    double hi = kQuarterPi + (best + 1) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = greedy_bound(x1);
    double f2 = greedy_bound(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = greedy_bound(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = greedy_bound(x1);
        }
    }
    const double alpha = (lo + hi) / 2.0;
    return {alpha, greedy_bound(alpha)};
}

PointSet uniform_points(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("uniform_points needs n >= 0");
    Rng rng(seed);
    std::vector<Point> pts(static_cast<std::size_t>(n));
    for (Point& p : pts) {
        p.x = uniform01(rng);
        p.y = uniform01(rng);
    }
    return PointSet(std::move(pts));
}

ExperimentResult greedy_stretch_experiment(int n_min, int n_max, int trials, std::uint64_t seed, int workers) {
    if (n_min < 4 || n_max < n_min) throw std::invalid_argument("greedy_stretch_experiment needs 4 <= n_min <= n_max");
    if (trials < 1) throw std::invalid_argument("greedy_stretch_experiment needs trials >= 1");

    ExperimentResult result;
    result.rng = kRngName;
    const auto per_n = static_cast<std::size_t>(trials);
    result.records.resize(static_cast<std::size_t>(n_max - n_min + 1) * per_n);
    parallel_for(result.records.size(), workers, [&](std::size_t index) {
        ExperimentRecord& r = result.records[index];
        r.n = n_min + static_cast<int>(index / per_n);
        r.trial = static_cast<int>(index % per_n);
        r.seed = derive_seed(seed, index);
        const DilationReport rep = stretch_factor(greedy_triangulation(uniform_points(r.n, r.seed)));
        r.stretch = rep.stretch;
        r.witness_pair = rep.witness_pair.value_or(VertexPair{0, 0});
    });

    ExperimentSummary& s = result.summary;
    for (std::size_t k = 0; k < result.records.size(); ++k) {
        const double v = result.records[k].stretch;
        if (k == 0 || v > s.max_stretch) {
            s.max_stretch = v;
            s.argmax = k;
        }
        const auto bin = static_cast<std::size_t>(std::max(0.0, std::floor((v - s.histogram_start) / s.histogram_width)));
        if (bin >= s.histogram.size()) s.histogram.resize(bin + 1, 0);
        ++s.histogram[bin];
    }
    return result;
}

bool in_convex_position(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 3) return n > 0;
    // (i, j) is a hull edge iff every other point lies strictly to its left.
    auto hull_edge = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k != i && k != j && orientation(points[i], points[j], points[k]) != Orientation::counterclockwise) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        bool on_hull = false;
        for (std::size_t j = 0; j < n && !on_hull; ++j) on_hull = j != i && hull_edge(i, j);
        if (!on_hull) return false;
    }
    return true;
}

ConvexSubsetResult convex_subset_greedy_max(const PointSet& points) {
    const std::size_t n = points.size();
    if (n > 16) throw std::invalid_argument("convex_subset_greedy_max handles at most 16 points");
    if (n < 3) throw std::invalid_argument("convex_subset_greedy_max needs at least three points");
    ConvexSubsetResult result;
    bool found = false;
    std::vector<std::size_t> subset;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 3) continue;
        subset.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) subset.push_back(i);
        }
        const PointSet sub = points.subset(subset);
        if (!in_convex_position(sub)) continue;
        const double value = stretch_factor(greedy_triangulation(sub)).stretch;
        if (!found || value > result.best) {
            result.best = value;
            result.subset = subset;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("convex_subset_greedy_max: no three points in convex position");
    return result;
}

}  // namespace dilation
