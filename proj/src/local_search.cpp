#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dilation/convex_dilation.hpp"
#include "dilation/random.hpp"

namespace dilation {

namespace {

// Lexicographic objective: the stretch itself, then how many pairs attain
// it, then a soft maximum over all pairs. The tail terms give the descent a
// gradient across the large plateaus of the max.
struct Score {
    double stretch = std::numeric_limits<double>::infinity();
    int at_max = 0;
    double soft = std::numeric_limits<double>::infinity();
};

constexpr double kTieTolerance = 1e-12;

bool better(const Score& a, const Score& b) {
    if (a.stretch < b.stretch - kTieTolerance) return true;
    if (a.stretch > b.stretch + kTieTolerance) return false;
    if (a.at_max != b.at_max) return a.at_max < b.at_max;
    return a.soft < b.soft * (1.0 - 1e-12);
}

class FlipTriangulation {
public:
    FlipTriangulation(int n, const ConvexTriangulation& start) : n_(n), N_(static_cast<std::size_t>(n)), adj_(N_ * N_, 0) {
        for (std::size_t i = 0; i < N_; ++i) set(i, (i + 1) % N_, true);
        diagonals_.assign(start.diagonals().begin(), start.diagonals().end());
        for (const Edge& e : diagonals_) set(e.u, e.v, true);
    }

    [[nodiscard]] std::size_t diagonal_count() const { return diagonals_.size(); }
    [[nodiscard]] const std::vector<Edge>& diagonals() const { return diagonals_; }

    /// Replaces diagonal k by the other diagonal of its quadrilateral.
    /// Returns the removed diagonal.
    Edge flip(std::size_t k) {
        const Edge old = diagonals_[k];
        const std::size_t c = apex(old.u, old.v, true);
        const std::size_t d = apex(old.u, old.v, false);
        set(old.u, old.v, false);
        set(c, d, true);
        diagonals_[k] = Edge(c, d);
        return old;
    }

    void undo(std::size_t k, Edge old) {
        const Edge cur = diagonals_[k];
        set(cur.u, cur.v, false);
        set(old.u, old.v, true);
        diagonals_[k] = old;
    }

private:
    void set(std::size_t a, std::size_t b, bool on) {
        adj_[a * N_ + b] = on;
        adj_[b * N_ + a] = on;
    }

    // Third vertex of the triangle on (a, b), a < b, strictly inside (a, b)
    // when `inner`, otherwise on the wrap-around side.
    std::size_t apex(std::size_t a, std::size_t b, bool inner) const {
        if (inner) {
            for (std::size_t c = a + 1; c < b; ++c) {
                if (adj_[a * N_ + c] && adj_[c * N_ + b]) return c;
            }
        } else {
            for (std::size_t c = (b + 1) % N_; c != a; c = (c + 1) % N_) {
                if (adj_[a * N_ + c] && adj_[c * N_ + b]) return c;
            }
        }
        throw std::logic_error("flip: diagonal without adjacent triangle");
    }

    int n_;
    std::size_t N_;
    std::vector<char> adj_;
    std::vector<Edge> diagonals_;
};

class Scorer {
public:
    explicit Scorer(int n) : n_(n), table_(n) {}

    Score operator()(const std::vector<Edge>& diagonals) {
        dist_ = detail::edge_matrix(n_, diagonals, table_);
        detail::floyd_warshall(dist_, n_);
        const auto N = static_cast<std::size_t>(n_);
        Score s{0.0, 0, 0.0};
        ratios_.clear();
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = i + 1; j < N; ++j) {
                const double r = dist_[i * N + j] / table_.chord(static_cast<int>(i), static_cast<int>(j));
                ratios_.push_back(r);
                s.stretch = std::max(s.stretch, r);
            }
        }
        for (double r : ratios_) {
            if (r >= s.stretch - 1e-9) ++s.at_max;
            s.soft += std::pow(r / s.stretch, 32);
        }
        return s;
    }

private:
    int n_;
    ChordTable table_;
    std::vector<double> dist_;
    std::vector<double> ratios_;
};

}  // namespace

LocalSearchResult local_search_min_dilation(int n, std::uint64_t budget, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("local_search_min_dilation needs n >= 4");
    if (budget < 1) throw std::invalid_argument("local_search_min_dilation needs budget >= 1");

    Rng rng(seed);
    Scorer score(n);
    FlipTriangulation cur(n, random_triangulation(n, rng()));
    Score cur_score = score(cur.diagonals());
    std::uint64_t evals = 1;

    LocalSearchResult best{cur_score.stretch, ConvexTriangulation::unchecked(n, cur.diagonals()), evals};
    std::vector<Edge> best_diagonals = cur.diagonals();
    Score best_score = cur_score;

    std::vector<std::size_t> order(cur.diagonal_count());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;

    while (evals < budget) {
        // First-improvement pass over the diagonals in random order.
        bool improved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t k : order) {
            if (evals >= budget) break;
            const Edge old = cur.flip(k);
            const Score s = score(cur.diagonals());
            ++evals;
            if (better(s, cur_score)) {
                cur_score = s;
                improved = true;
                break;
            }
            cur.undo(k, old);
        }
        if (improved) continue;

        // Local optimum.
        if (better(cur_score, best_score)) {
            best_score = cur_score;
            best_diagonals = cur.diagonals();
        }
        if (evals >= budget) break;
        if (uniform_below(rng, 5) == 0) {
            cur = FlipTriangulation(n, random_triangulation(n, rng()));
        } else {
            cur = FlipTriangulation(n, ConvexTriangulation::unchecked(n, best_diagonals));
            const auto kicks = 2 + uniform_below(rng, static_cast<std::uint64_t>(std::max(1, n / 3)));
            for (std::uint64_t i = 0; i < kicks && cur.diagonal_count() > 0; ++i) {
                cur.flip(uniform_below(rng, cur.diagonal_count()));
            }
        }
        cur_score = score(cur.diagonals());
        ++evals;
    }
    if (better(cur_score, best_score)) {
        best_score = cur_score;
        best_diagonals = cur.diagonals();
    }
    best.stretch = best_score.stretch;
    best.triangulation = ConvexTriangulation::unchecked(n, best_diagonals);
    best.evaluations = evals;
    return best;
}

}  // namespace dilation
