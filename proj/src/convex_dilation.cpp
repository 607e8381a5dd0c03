#include "dilation/convex_dilation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dilation/random.hpp"

namespace dilation {

int hull_length(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("hull_length: index out of range");
    if (i == j) throw std::invalid_argument("hull_length: indices must differ");
    const int d = std::abs(i - j);
    return std::min(d, n - d);
}

double chord_ratio(const ChordProfile& profile) {
    const int half = profile.n / 2;
    if (profile.n < 3) throw std::invalid_argument("chord_ratio: n must be at least 3");
    if (profile.lambda < 1 || profile.lambda > half) throw std::invalid_argument("chord_ratio: lambda out of range");
    if (profile.hops.empty()) throw std::invalid_argument("chord_ratio: empty hop list");
    // Sum in sorted order so the value does not depend on hop order.
    std::vector<int> hops = profile.hops;
    std::sort(hops.begin(), hops.end());
    double sum = 0.0;
    for (int h : hops) {
        if (h < 1 || h > half) throw std::invalid_argument("chord_ratio: hop out of range");
        sum += std::sin(h * std::numbers::pi / profile.n);
    }
    return sum / std::sin(profile.lambda * std::numbers::pi / profile.n);
}

ChordTable::ChordTable(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("ChordTable: n must be at least 3");
    lengths_.resize(static_cast<std::size_t>(n / 2 + 1));
    for (int m = 0; m <= n / 2; ++m) lengths_[static_cast<std::size_t>(m)] = 2.0 * std::sin(m * std::numbers::pi / n);
}

bool diagonals_cross(Edge a, Edge b) {
    return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

ConvexTriangulation::ConvexTriangulation(int n, std::vector<Edge> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    if (diagonals_.size() != static_cast<std::size_t>(n - 3)) {
        throw std::invalid_argument("triangulation of an " + std::to_string(n) + "-gon needs " + std::to_string(n - 3) +
                                    " diagonals, got " + std::to_string(diagonals_.size()));
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    for (std::size_t k = 0; k < diagonals_.size(); ++k) {
        const Edge& e = diagonals_[k];
        if (e.v >= static_cast<std::size_t>(n)) throw std::invalid_argument("diagonal endpoint out of range");
        if (e.u == e.v || hull_length(n, static_cast<int>(e.u), static_cast<int>(e.v)) < 2) {
            throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not a diagonal");
        }
        if (k > 0 && diagonals_[k - 1] == e) throw std::invalid_argument("duplicate diagonal");
        for (std::size_t l = 0; l < k; ++l) {
            if (diagonals_cross(diagonals_[l], e)) throw std::invalid_argument("diagonals cross");
        }
    }
}

ConvexTriangulation ConvexTriangulation::unchecked(int n, std::vector<Edge> diagonals) {
    ConvexTriangulation t;
    t.n_ = n;
    t.diagonals_ = std::move(diagonals);
    std::sort(t.diagonals_.begin(), t.diagonals_.end());
    return t;
}

ConvexTriangulation ConvexTriangulation::fan(int n, int apex) {
    if (n < 3 || apex < 0 || apex >= n) throw std::invalid_argument("fan: bad n or apex");
    std::vector<Edge> diags;
    for (int k = 2; k <= n - 2; ++k) diags.emplace_back(apex, (apex + k) % n);
    return ConvexTriangulation(n, std::move(diags));
}

std::vector<Edge> ConvexTriangulation::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(2 * n_ - 3));
    for (int i = 0; i < n_; ++i) out.emplace_back(i, (i + 1) % n_);
    out.insert(out.end(), diagonals_.begin(), diagonals_.end());
    return out;
}

GeometricGraph realize(const ConvexTriangulation& t) { return GeometricGraph(regular_ngon(t.n(), 1.0), t.edges()); }

namespace detail {

void floyd_warshall(std::vector<double>& dist, int n) {
    const auto N = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < N; ++k) {
        const double* rowk = dist.data() + k * N;
        for (std::size_t i = 0; i < N; ++i) {
            double* rowi = dist.data() + i * N;
            const double dik = rowi[k];
            if (dik == std::numeric_limits<double>::infinity()) continue;
            for (std::size_t j = 0; j < N; ++j) {
                const double via = dik + rowk[j];
                rowi[j] = via < rowi[j] ? via : rowi[j];
            }
        }
    }
}

double max_ratio(const std::vector<double>& dist, const ChordTable& table, VertexPair* pair) {
    const int n = table.n();
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double r = dist[static_cast<std::size_t>(i * n + j)] / table.chord(i, j);
            if (r > best) {
                best = r;
                if (pair) *pair = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
            }
        }
    }
    return best;
}

std::vector<double> edge_matrix(int n, std::span<const Edge> diagonals, const ChordTable& table) {
    const auto N = static_cast<std::size_t>(n);
    std::vector<double> dist(N * N, std::numeric_limits<double>::infinity());
    auto link = [&](std::size_t a, std::size_t b) {
        const double w = table.chord(static_cast<int>(a), static_cast<int>(b));
        dist[a * N + b] = w;
        dist[b * N + a] = w;
    };
    for (std::size_t i = 0; i < N; ++i) {
        dist[i * N + i] = 0.0;
        link(i, (i + 1) % N);
    }
    for (const Edge& e : diagonals) link(e.u, e.v);
    return dist;
}

}  // namespace detail

DilationReport triangulation_stretch(const ConvexTriangulation& t) {
    const int n = t.n();
    if (n < 3) throw std::invalid_argument("triangulation_stretch: empty triangulation");
    const ChordTable table(n);
    std::vector<double> dist = detail::edge_matrix(n, t.diagonals(), table);
    const std::vector<double> direct = dist;
    detail::floyd_warshall(dist, n);

    VertexPair pair{0, 1};
    DilationReport report;
    report.stretch = detail::max_ratio(dist, table, &pair);
    report.witness_pair = pair;

    // Walk the shortest path by taking, at each step, the smallest neighbour
    // that stays on some shortest path.
    const auto N = static_cast<std::size_t>(n);
    std::size_t cur = pair.first;
    const std::size_t target = pair.second;
    report.witness_path.push_back(cur);
    while (cur != target) {
        const double remaining = dist[cur * N + target];
        std::size_t next = N;
        for (std::size_t w = 0; w < N; ++w) {
            if (w == cur || direct[cur * N + w] == std::numeric_limits<double>::infinity()) continue;
            const double through = direct[cur * N + w] + dist[w * N + target];
            if (std::abs(through - remaining) <= 1e-12 * remaining) {
                next = w;
                break;
            }
        }
        if (next == N) throw std::logic_error("triangulation_stretch: path reconstruction failed");
        cur = next;
        report.witness_path.push_back(cur);
    }
    return report;
}

int longest_chord(const ConvexTriangulation& t) {
    int best = t.n() >= 2 ? 1 : 0;
    for (const Edge& e : t.diagonals()) {
        best = std::max(best, hull_length(t.n(), static_cast<int>(e.u), static_cast<int>(e.v)));
    }
    return best;
}

ConvexTriangulation random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_triangulation needs n >= 3");
    Rng rng(seed);
    std::vector<Edge> diags;
    std::vector<std::pair<int, int>> pending{{0, n - 1}};
    while (!pending.empty()) {
        const auto [a, b] = pending.back();
        pending.pop_back();
        if (b - a < 2) continue;
        const int apex = a + 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(b - a - 1)));
        if (apex - a >= 2) diags.emplace_back(a, apex);
        if (b - apex >= 2) diags.emplace_back(apex, b);
        pending.push_back({a, apex});
        pending.push_back({apex, b});
    }
    return ConvexTriangulation::unchecked(n, std::move(diags));
}

std::uint64_t catalan(int k) {
    if (k < 0 || k > 33) throw std::out_of_range("catalan: k out of range");
    unsigned __int128 c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return static_cast<std::uint64_t>(c);
}

}  // namespace dilation
