#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dilation/constructions.hpp"
#include "dilation/random.hpp"

namespace dilation {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Score {
    double stretch = kInf;
    int at_max = std::numeric_limits<int>::max();
    double soft = kInf;
};

bool better(const Score& a, const Score& b) {
    if (a.stretch < b.stretch - 1e-12) return true;
    if (a.stretch > b.stretch + 1e-12) return false;
    if (a.at_max != b.at_max) return a.at_max < b.at_max;
    return a.soft < b.soft * (1.0 - 1e-12);
}

/// Candidate edges (no point in their interior) and their pairwise crossings.
class CandidateSet {
public:
    explicit CandidateSet(const PointSet& pts) : n_(pts.size()) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                bool blocked = false;
                for (std::size_t k = 0; k < n_ && !blocked; ++k) {
                    if (k != i && k != j && point_in_segment_interior(pts[k], pts[i], pts[j])) blocked = true;
                }
                if (!blocked) edges_.emplace_back(i, j);
            }
        }
        const std::size_t m = edges_.size();
        length_.resize(m);
        conflicts_.assign(m, {});
        for (std::size_t a = 0; a < m; ++a) {
            length_[a] = pts.distance(edges_[a].u, edges_[a].v);
            for (std::size_t b = a + 1; b < m; ++b) {
                const Edge& e = edges_[a];
                const Edge& f = edges_[b];
                if (segments_properly_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v])) {
                    conflicts_[a].push_back(b);
                    conflicts_[b].push_back(a);
                }
            }
        }
    }

    [[nodiscard]] std::size_t size() const { return edges_.size(); }
    [[nodiscard]] const Edge& edge(std::size_t k) const { return edges_[k]; }
    [[nodiscard]] double length(std::size_t k) const { return length_[k]; }
    [[nodiscard]] const std::vector<std::size_t>& conflicts(std::size_t k) const { return conflicts_[k]; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<double> length_;
    std::vector<std::vector<std::size_t>> conflicts_;
};

class DegreeCappedGraph {
public:
    DegreeCappedGraph(const CandidateSet& cands, std::size_t n, std::size_t cap)
        : cands_(&cands), cap_(cap), in_(cands.size(), 0), degree_(n, 0) {}

    [[nodiscard]] bool contains(std::size_t k) const { return in_[k] != 0; }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return degree_[v]; }

    [[nodiscard]] bool can_add(std::size_t k) const {
        if (in_[k]) return false;
        const Edge& e = cands_->edge(k);
        if (degree_[e.u] >= cap_ || degree_[e.v] >= cap_) return false;
        for (std::size_t c : cands_->conflicts(k)) {
            if (in_[c]) return false;
        }
        return true;
    }

    void add(std::size_t k) {
        in_[k] = 1;
        ++degree_[cands_->edge(k).u];
        ++degree_[cands_->edge(k).v];
    }
    void remove(std::size_t k) {
        in_[k] = 0;
        --degree_[cands_->edge(k).u];
        --degree_[cands_->edge(k).v];
    }

    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t k = 0; k < in_.size(); ++k) {
            if (in_[k]) out.push_back(cands_->edge(k));
        }
        return out;
    }

private:
    const CandidateSet* cands_;
    std::size_t cap_;
    std::vector<char> in_;
    std::vector<std::size_t> degree_;
};

class Scorer {
public:
    Scorer(const PointSet& pts, const CandidateSet& cands) : pts_(pts), cands_(cands), N_(pts.size()) {}

    Score operator()(const DegreeCappedGraph& g) {
        dist_.assign(N_ * N_, kInf);
        for (std::size_t i = 0; i < N_; ++i) dist_[i * N_ + i] = 0.0;
        for (std::size_t k = 0; k < cands_.size(); ++k) {
            if (!g.contains(k)) continue;
            const Edge& e = cands_.edge(k);
            dist_[e.u * N_ + e.v] = dist_[e.v * N_ + e.u] = cands_.length(k);
        }
        detail::floyd_warshall(dist_, static_cast<int>(N_));
        Score s{0.0, 0, 0.0};
        for (std::size_t i = 0; i < N_; ++i) {
            for (std::size_t j = i + 1; j < N_; ++j) s.stretch = std::max(s.stretch, dist_[i * N_ + j] / pts_.distance(i, j));
        }
        if (s.stretch == kInf) {
            // Disconnected: prefer fewer unreachable pairs.
            for (std::size_t i = 0; i < N_; ++i) {
                for (std::size_t j = i + 1; j < N_; ++j) s.at_max += dist_[i * N_ + j] == kInf;
            }
            return s;
        }
        for (std::size_t i = 0; i < N_; ++i) {
            for (std::size_t j = i + 1; j < N_; ++j) {
                const double r = dist_[i * N_ + j] / pts_.distance(i, j);
                if (r >= s.stretch - 1e-9) ++s.at_max;
                s.soft += std::pow(r / s.stretch, 16);
            }
        }
        return s;
    }

private:
    const PointSet& pts_;
    const CandidateSet& cands_;
    std::size_t N_;
    std::vector<double> dist_;
};

void fill_greedily(DegreeCappedGraph& g, const CandidateSet& cands, Rng& rng) {
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(cands.size());
    for (std::size_t k = 0; k < cands.size(); ++k) order.push_back({cands.length(k) * (1.0 + 0.5 * uniform01(rng)), k});
    std::sort(order.begin(), order.end());
    for (const auto& [key, k] : order) {
        if (g.can_add(k)) g.add(k);
    }
}

}  // namespace

FalsifyResult falsify_degree_bound(const PointSet& points, int degree_cap, double target, std::uint64_t budget,
                                   std::uint64_t seed) {
    if (degree_cap < 2) throw std::invalid_argument("falsify_degree_bound needs degree_cap >= 2");
    if (budget < 1) throw std::invalid_argument("falsify_degree_bound needs budget >= 1");
    if (points.size() < 2) throw std::invalid_argument("falsify_degree_bound needs at least two points");

    const std::size_t n = points.size();
    const CandidateSet cands(points);
    Scorer score(points, cands);
    Rng rng(seed);

    DegreeCappedGraph cur(cands, n, static_cast<std::size_t>(degree_cap));
    fill_greedily(cur, cands, rng);
    Score cur_score = score(cur);
    std::uint64_t evals = 1;
    DegreeCappedGraph best = cur;
    Score best_score = cur_score;
    std::uint64_t stale = 0;
    const std::uint64_t restart_after = 200 + 20 * cands.size();

    while (evals < budget && !(best_score.stretch < target - 1e-9)) {
        // Insert a random absent edge, evicting crossing edges and, at
        // saturated endpoints, one random incident edge; then refill.
        std::vector<std::size_t> absent;
        for (std::size_t e = 0; e < cands.size(); ++e) {
            if (!cur.contains(e)) absent.push_back(e);
        }
        if (absent.empty()) break;  // complete graph, nothing to move to
        DegreeCappedGraph next = cur;
        const std::size_t k = absent[uniform_below(rng, absent.size())];
        for (std::size_t c : cands.conflicts(k)) {
            if (next.contains(c)) next.remove(c);
        }
        for (std::size_t endpoint : {cands.edge(k).u, cands.edge(k).v}) {
            if (next.degree(endpoint) < static_cast<std::size_t>(degree_cap)) continue;
            std::vector<std::size_t> incident;
            for (std::size_t e = 0; e < cands.size(); ++e) {
                if (next.contains(e) && (cands.edge(e).u == endpoint || cands.edge(e).v == endpoint)) incident.push_back(e);
            }
            next.remove(incident[uniform_below(rng, incident.size())]);
        }
        next.add(k);
        fill_greedily(next, cands, rng);

        const Score s = score(next);
        ++evals;
        if (!better(cur_score, s)) {
            const bool improved = better(s, cur_score);
            cur = std::move(next);
            cur_score = s;
            if (better(cur_score, best_score)) {
                best = cur;
                best_score = cur_score;
            }
            stale = improved ? 0 : stale + 1;
        } else {
            ++stale;
        }
        if (stale > restart_after) {
            cur = DegreeCappedGraph(cands, n, static_cast<std::size_t>(degree_cap));
            fill_greedily(cur, cands, rng);
            cur_score = score(cur);
            ++evals;
            stale = 0;
        }
    }

    FalsifyResult result;
    result.graph = GeometricGraph(points, best.edges());
    result.best_found = stretch_factor(result.graph).stretch;
    result.evaluations = evals;
    result.beat_target = result.best_found < target - 1e-9;
    return result;
}

}  // namespace dilation
