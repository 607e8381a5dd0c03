// Exhaustive search over triangulations of the regular n-gon.
//
// Triangulations are generated by apex decomposition: the pending region is
// a stack of index intervals [lo, hi] whose base chord (lo, hi) is already
// fixed, and choosing the apex m of the triangle on that chord splits the
// interval into [lo, m] and [m, hi]. Every triangulation is produced exactly
// once and the state is O(n).
//
// Pruning bound: every edge of a completion is either fixed already or joins
// two vertices of one pending interval. The graph made of the fixed edges plus
// every chord inside every pending interval therefore contains each completion,
// and its distances bound all completion distances from below. Its stretch is
// a certified lower bound that only grows as intervals get split.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dilation/convex_dilation.hpp"
#include "dilation/parallel.hpp"

namespace dilation {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Slack between a lower bound and an incumbent before a subtree is cut, so
// rounding in the bound can never discard an equal-valued completion.
constexpr double kPruneSlack = 1e-12;

struct Interval {
    int lo;
    int hi;
};

struct PartialState {
    std::vector<Interval> pending;
    std::vector<Edge> diagonals;
};

class Evaluator {
public:
    explicit Evaluator(int n) : n_(n), N_(static_cast<std::size_t>(n)), table_(n) {
        chord_.resize(N_ * N_, 0.0);
        inv_chord_.resize(N_ * N_, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double c = table_.chord(i, j);
                chord_[idx(i, j)] = c;
                inv_chord_[idx(i, j)] = 1.0 / c;
            }
        }
        dist_.resize(N_ * N_);
    }

    /// Exact stretch of the triangulation given by `diagonals`.
    double leaf_value(std::span<const Edge> diagonals) {
        reset_to_hull();
        for (const Edge& e : diagonals) link(e.u, e.v);
        detail::floyd_warshall(dist_, n_);
        return scan_max(kInf);
    }

    /// Lower bound on the stretch of every completion. May stop early and
    /// return any value above `cutoff` once that is certain.
    double lower_bound(std::span<const Interval> pending, std::span<const Edge> diagonals, double cutoff) {
        reset_to_hull();
        for (const Edge& e : diagonals) link(e.u, e.v);
        for (const Interval& iv : pending) {
            for (int i = iv.lo; i <= iv.hi; ++i) {
                for (int j = i + 2; j <= iv.hi; ++j) link(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
        detail::floyd_warshall(dist_, n_);
        return scan_max(cutoff);
    }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * N_ + static_cast<std::size_t>(j); }

    void reset_to_hull() {
        std::fill(dist_.begin(), dist_.end(), kInf);
        for (std::size_t i = 0; i < N_; ++i) {
            dist_[i * N_ + i] = 0.0;
            link(i, (i + 1) % N_);
        }
    }

    void link(std::size_t a, std::size_t b) {
        const double w = chord_[a * N_ + b];
        dist_[a * N_ + b] = w;
        dist_[b * N_ + a] = w;
    }

    double scan_max(double cutoff) const {
        double best = 0.0;
        for (std::size_t i = 0; i < N_; ++i) {
            const double* d = dist_.data() + i * N_;
            const double* inv = inv_chord_.data() + i * N_;
            for (std::size_t j = i + 1; j < N_; ++j) {
                const double r = d[j] * inv[j];
                best = r > best ? r : best;
            }
            if (best > cutoff) return best;
        }
        return best;
    }

    int n_;
    std::size_t N_;
    ChordTable table_;
    std::vector<double> chord_;
    std::vector<double> inv_chord_;
    std::vector<double> dist_;
};

void lower_atomic(std::atomic<double>& target, double v) {
    double cur = target.load(std::memory_order_relaxed);
    while (v < cur && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

/// Best and second-distinct values seen by any worker. Both are values of
/// visited triangulations (or infinity), so both bound the final answers from
/// above; stale reads only weaken pruning.
class Incumbent {
public:
    void offer(double v) {
        double b = best_.load(std::memory_order_relaxed);
        bool replaced = false;
        while (v < b) {
            if (best_.compare_exchange_weak(b, v, std::memory_order_relaxed)) {
                replaced = true;
                break;
            }
        }
        if (replaced) {
            if (b > v + kDistinctStretchMargin) lower_atomic(second_, b);
        } else if (v > b + kDistinctStretchMargin) {
            lower_atomic(second_, v);
        }
    }
    [[nodiscard]] double target(bool track_second) const {
        return (track_second ? second_ : best_).load(std::memory_order_relaxed);
    }

private:
    std::atomic<double> best_{kInf};
    std::atomic<double> second_{kInf};
};

struct TaskResult {
    std::uint64_t count = 0;
    std::uint64_t pruned = 0;
    double best = kInf;
    std::vector<Edge> best_diagonals;  // sorted
    double second = kInf;              // smallest value above best + margin
};

void record_value(TaskResult& r, double v, std::span<const Edge> diagonals) {
    if (v < r.best) {
        const double old = r.best;
        r.best = v;
        r.best_diagonals.assign(diagonals.begin(), diagonals.end());
        std::sort(r.best_diagonals.begin(), r.best_diagonals.end());
        // r.second exceeded old + margin, so it stays distinct from v.
        if (old > v + kDistinctStretchMargin) r.second = std::min(r.second, old);
    } else if (v == r.best) {
        std::vector<Edge> sorted(diagonals.begin(), diagonals.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted < r.best_diagonals) r.best_diagonals = std::move(sorted);
    } else if (v > r.best + kDistinctStretchMargin) {
        r.second = std::min(r.second, v);
    }
}

class Search {
public:
    Search(int n, const EnumerationOptions& options, Incumbent& incumbent)
        : n_(n), options_(options), incumbent_(incumbent), evaluator_(n) {}

    TaskResult run(PartialState state) {
        state_ = std::move(state);
        result_ = {};
        descend();
        return std::move(result_);
    }

private:
    void descend() {
        if (state_.pending.empty()) {
            const double v = evaluator_.leaf_value(state_.diagonals);
            ++result_.count;
            record_value(result_, v, state_.diagonals);
            incumbent_.offer(v);
            return;
        }
        if (options_.prune) {
            const double target = incumbent_.target(options_.track_second_best);
            if (target < kInf) {
                const double cutoff = target + kPruneSlack;
                if (evaluator_.lower_bound(state_.pending, state_.diagonals, cutoff) > cutoff) {
                    ++result_.pruned;
                    return;
                }
            }
        }
        const Interval top = state_.pending.back();
        state_.pending.pop_back();
        for (int m = top.lo + 1; m < top.hi; ++m) {
            const std::size_t diag_mark = state_.diagonals.size();
            const std::size_t pend_mark = state_.pending.size();
            if (m - top.lo >= 2) state_.diagonals.emplace_back(top.lo, m);
            if (top.hi - m >= 2) state_.diagonals.emplace_back(m, top.hi);
            if (top.hi - m >= 3) state_.pending.push_back({m, top.hi});
            if (m - top.lo >= 3) state_.pending.push_back({top.lo, m});
            descend();
            state_.diagonals.resize(diag_mark);
            state_.pending.resize(pend_mark);
        }
        state_.pending.push_back(top);
    }

    int n_;
    const EnumerationOptions& options_;
    Incumbent& incumbent_;
    Evaluator evaluator_;
    PartialState state_;
    TaskResult result_;
};

PartialState root_state(int n) {
    PartialState s;
    if (n - 1 >= 3) s.pending.push_back({0, n - 1});
    return s;
}

/// Breadth-first expansion of the root into at least `target` independent
/// partial states (fewer when the tree is smaller). Order is deterministic.
std::vector<PartialState> split_tasks(int n, std::size_t target) {
    std::vector<PartialState> frontier{root_state(n)};
    bool expanded = true;
    while (frontier.size() < target && expanded) {
        expanded = false;
        std::vector<PartialState> next;
        for (PartialState& s : frontier) {
            if (s.pending.empty()) {
                next.push_back(std::move(s));
                continue;
            }
            expanded = true;
            const Interval top = s.pending.back();
            for (int m = top.lo + 1; m < top.hi; ++m) {
                PartialState c = s;
                c.pending.pop_back();
                if (m - top.lo >= 2) c.diagonals.emplace_back(top.lo, m);
                if (top.hi - m >= 2) c.diagonals.emplace_back(m, top.hi);
                if (top.hi - m >= 3) c.pending.push_back({m, top.hi});
                if (m - top.lo >= 3) c.pending.push_back({top.lo, m});
                next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

void enumerate_rec(int n, PartialState& s, std::uint64_t& count,
                   const std::function<void(const ConvexTriangulation&)>& visitor) {
    if (s.pending.empty()) {
        ++count;
        if (visitor) visitor(ConvexTriangulation::unchecked(n, s.diagonals));
        return;
    }
    const Interval top = s.pending.back();
    s.pending.pop_back();
    for (int m = top.lo + 1; m < top.hi; ++m) {
        const std::size_t diag_mark = s.diagonals.size();
        const std::size_t pend_mark = s.pending.size();
        if (m - top.lo >= 2) s.diagonals.emplace_back(top.lo, m);
        if (top.hi - m >= 2) s.diagonals.emplace_back(m, top.hi);
        if (top.hi - m >= 3) s.pending.push_back({m, top.hi});
        if (m - top.lo >= 3) s.pending.push_back({top.lo, m});
        enumerate_rec(n, s, count, visitor);
        s.diagonals.resize(diag_mark);
        s.pending.resize(pend_mark);
    }
    s.pending.push_back(top);
}

}  // namespace

std::uint64_t enumerate_triangulations(int n, const std::function<void(const ConvexTriangulation&)>& visitor) {
    if (n < 3) throw std::invalid_argument("enumerate_triangulations needs n >= 3");
    PartialState s = root_state(n);
    std::uint64_t count = 0;
    enumerate_rec(n, s, count, visitor);
    return count;
}

EnumerationResult min_dilation_convex(int n, const EnumerationOptions& options) {
    if (n < 4) throw std::invalid_argument("min_dilation_convex needs n >= 4");
    if (n > 64) throw std::invalid_argument("min_dilation_convex supports n <= 64");
    const int workers = std::max(options.workers, 1);

    // The task split does not depend on the worker count.
    std::vector<PartialState> tasks = split_tasks(n, 256);
    std::vector<TaskResult> results(tasks.size());
    Incumbent incumbent;
    parallel_for(tasks.size(), workers, [&](std::size_t t) {
        Search search(n, options, incumbent);
        results[t] = search.run(std::move(tasks[t]));
    });

    EnumerationResult out;
    double best = kInf;
    const std::vector<Edge>* best_diags = nullptr;
    for (const TaskResult& r : results) {
        out.count += r.count;
        out.pruned_subtrees += r.pruned;
        if (r.count == 0) continue;
        if (r.best < best || (r.best == best && r.best_diagonals < *best_diags)) {
            best = r.best;
            best_diags = &r.best_diagonals;
        }
    }
    if (!best_diags) throw std::logic_error("min_dilation_convex: no triangulation evaluated");
    out.min_stretch = best;
    out.argmin = ConvexTriangulation::unchecked(n, *best_diags);

    double second = kInf;
    for (const TaskResult& r : results) {
        if (r.count == 0) continue;
        if (r.best > best + kDistinctStretchMargin) second = std::min(second, r.best);
        if (r.second > best + kDistinctStretchMargin) second = std::min(second, r.second);
    }
    // Pruning against the best value alone can discard the runner-up.
    if (second < kInf && (!options.prune || options.track_second_best)) out.second_best = second;
    if (options.threshold) out.below_threshold = best < *options.threshold - kDistinctStretchMargin;
    return out;
}

}  // namespace dilation
