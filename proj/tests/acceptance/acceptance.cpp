// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails. `--extended` adds the exhaustive S23 run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dilation/cli.hpp"
#include "dilation/constructions.hpp"
#include "dilation/convex_dilation.hpp"
#include "dilation/greedy.hpp"
#include "dilation/random.hpp"
#include "dilation/repro.hpp"

using namespace dilation;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string truncated4(double v) { return fmt("%.4f", std::floor(v * 1e4) / 1e4); }

// 1. Minimum dilation of S4..S16 against the printed table.
Outcome table_reproduction(int workers) {
    const std::vector<std::pair<int, double>> printed{
        {4, 1.4142},  {5, 1.2360},  {6, 1.3660},  {7, 1.3351},  {8, 1.4142},  {9, 1.3472},  {10, 1.3968},
        {11, 1.3770}, {12, 1.3836}, {13, 1.3912}, {14, 1.4053}, {15, 1.4089}, {16, 1.4092},
    };
    ReproOptions o;
    o.max_n = 16;
    o.workers = workers;
    const ReproductionReport report = reproduce_table(o);
    Outcome out;
    int truncation_ok = 0, literal_ok = 0, cross_ok = 0;
    std::string literal_misses;
    for (const auto& [n, value] : printed) {
        const ReproRow& row = report.rows[static_cast<std::size_t>(n - 4)];
        const bool t = truncated4(row.computed) == fmt("%.4f", value);
        const bool l = std::abs(row.computed - value) <= 5e-5;
        const bool c = row.cross_check_diff <= 1e-9;
        truncation_ok += t;
        literal_ok += l;
        cross_ok += c;
        if (!l) literal_misses += " n=" + std::to_string(n) + ":" + fmt("%.2e", std::abs(row.computed - value));
        out.pass = out.pass && t && l && c;
    }
    out.detail = std::to_string(truncation_ok) + "/13 match 4 decimals, " + std::to_string(literal_ok) +
                 "/13 within 5e-5 of the printed digits" + (literal_misses.empty() ? "" : " (off:" + literal_misses + ")") +
                 ", " + std::to_string(cross_ok) + "/13 cross-checks <= 1e-9, " + fmt("%.1fs", report.seconds);
    return out;
}

// 2. Catalan counts, against the convolution recurrence.
Outcome catalan_counts() {
    std::vector<std::uint64_t> c(13, 0);
    c[0] = 1;
    for (std::size_t k = 1; k < c.size(); ++k)
        for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    Outcome out;
    for (int n = 4; n <= 14; ++n) {
        const std::uint64_t got = enumerate_triangulations(n);
        if (got != c[static_cast<std::size_t>(n - 2)]) {
            out.pass = false;
            out.detail += " n=" + std::to_string(n) + " got " + std::to_string(got);
        }
    }
    out.pass = out.pass && c[12] == 208012;
    if (out.pass) out.detail = "n=4..14, C_12 = " + std::to_string(c[12]);
    return out;
}

// 3. Chord-ratio values for the 23-gon with lambda = 11.
Outcome chord_ratio_table() {
    const std::vector<std::pair<std::vector<int>, std::string>> table{
        {{4, 7}, "1.3396"},    {{5, 6}, "1.3651"},    {{5, 7}, "1.4514"},    {{6, 6}, "1.4650"},
        {{2, 3, 6}, "1.4023"}, {{1, 5, 5}, "1.4061"}, {{2, 4, 5}, "1.4237"}, {{1, 3, 8}, "1.4257"},
        {{2, 2, 8}, "1.4308"}, {{3, 3, 5}, "1.4312"}, {{3, 4, 4}, "1.4409"}, {{1, 4, 7}, "1.4761"},
        {{2, 3, 7}, "1.4886"}, {{3, 3, 6}, "1.5312"}, {{1, 1, 4, 5}, "1.4263"}, {{1, 2, 3, 5}, "1.4388"},
    };
    Outcome out;
    int ok = 0;
    std::string misses;
    for (const auto& [hops, printed] : table) {
        const double v = chord_ratio({23, 11, hops});
        if (truncated4(v) == printed) {
            ++ok;
        } else {
            out.pass = false;
            std::string name = "f(";
            for (std::size_t k = 0; k < hops.size(); ++k) name += (k ? "," : "") + std::to_string(hops[k]);
            misses += " " + name + ")=" + fmt("%.10f", v) + " vs " + printed;
        }
    }
    out.detail = std::to_string(ok) + "/16 match" + (misses.empty() ? "" : ";" + misses);
    return out;
}

// 4. The frozen S23 triangulation, plus the local-search substitute for the
// exhaustive run.
Outcome s23(bool extended, int workers) {
    Outcome out;
    const NamedConstruction c = s23_witness();
    const ConstructionCheck check = verify(c, 1e-12);
    const VertexPair w = check.report.witness_pair.value_or(VertexPair{0, 0});
    const bool witness = w == VertexPair{10, 21} || w == VertexPair{6, 18};
    const double exact = (2 * std::sin(2 * kPi / 23) + std::sin(8 * kPi / 23)) / std::sin(11 * kPi / 23);
    const bool stretch = std::abs(check.report.stretch - exact) <= 1e-12;

    const LocalSearchResult ls = local_search_min_dilation(23, 1000000, 1);
    const bool not_below = ls.stretch >= exact - 1e-9;
    const bool reaches = std::abs(ls.stretch - exact) <= 1e-9;
    out.pass = check.ok() && witness && stretch && not_below && reaches;
    out.detail = "stretch " + fmt("%.12f", check.report.stretch) + " witness (" + std::to_string(w.first) + "," +
                 std::to_string(w.second) + "), local search " + fmt("%.12f", ls.stretch) + " after " +
                 std::to_string(ls.evaluations) + " evaluations";
    if (extended) {
        EnumerationOptions o;
        o.prune = true;
        o.workers = workers;
        const EnumerationResult r = min_dilation_convex(23, o);
        const double f335 = chord_ratio({23, 11, {3, 3, 5}});
        const bool min_ok = std::abs(r.min_stretch - exact) <= 1e-12;
        const bool second_ok = r.second_best && std::abs(*r.second_best - f335) <= 1e-12;
        const std::uint64_t count = enumerate_triangulations(23);
        const bool count_ok = count == 24466267020ULL;
        out.pass = out.pass && min_ok && second_ok && count_ok;
        out.detail += "; exhaustive min " + fmt("%.12f", r.min_stretch) + " second " +
                      fmt("%.12f", r.second_best.value_or(0.0)) + " count " + std::to_string(count);
    }
    return out;
}

// 5. Pruning and worker count never change the minimum.
Outcome pruning_soundness() {
    Outcome out;
    for (int n = 4; n <= 12; ++n) {
        EnumerationOptions base;
        const double reference = min_dilation_convex(n, base).min_stretch;
        for (int workers : {1, 2, 4}) {
            for (bool prune : {false, true}) {
                EnumerationOptions o;
                o.prune = prune;
                o.workers = workers;
                const double v = min_dilation_convex(n, o).min_stretch;
                if (std::memcmp(&v, &reference, sizeof v) != 0) {
                    out.pass = false;
                    out.detail += " n=" + std::to_string(n) + " workers=" + std::to_string(workers) +
                                  (prune ? " pruned" : " unpruned");
                }
            }
        }
    }
    if (out.pass) out.detail = "n=4..12, workers {1,2,4}, bit-identical";
    return out;
}

// 6. Longest chord of random S23 triangulations.
Outcome longest_chord_property() {
    Outcome out;
    int lo = 99, hi = 0;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        const int l = longest_chord(random_triangulation(23, derive_seed(23, s)));
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    out.pass = lo >= 8 && hi <= 11;
    out.detail = "10000 samples, longest chord in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    return out;
}

Outcome check_construction(const NamedConstruction& c, double bound, const std::vector<VertexPair>& witnesses) {
    const ConstructionCheck check = verify(c, 1e-12);
    Outcome out;
    const VertexPair w = check.report.witness_pair.value_or(VertexPair{0, 0});
    const bool witness = std::find(witnesses.begin(), witnesses.end(), w) != witnesses.end();
    out.pass = check.plane && check.degree_ok && std::abs(check.report.stretch - bound) <= 1e-12 && witness;
    out.detail = c.name + " " + check.describe();
    return out;
}

// 7. Degree 3 on hex13.
Outcome degree3() {
    const double bound = 1.0 + std::sqrt(3.0);
    Outcome out = check_construction(degree3_spanner13(), bound, {{1, 3}, {5, 7}, {9, 11}});
    out.pass = out.pass && max_degree(degree3_spanner13().graph) <= 3;
    const FalsifyResult f = falsify_degree_bound(hex13(), 3, bound, 100000, 1);
    out.pass = out.pass && f.best_found >= bound - 1e-9;
    out.detail += "; search best " + fmt("%.12f", f.best_found) + " after " + std::to_string(f.evaluations);
    return out;
}

// 8. Degree 4 on pentagon6, and collinear extensions of both constructions.
Outcome degree4() {
    const double bound = 1.0 + std::sqrt((5.0 - std::sqrt(5.0)) / 2.0);
    Outcome out = check_construction(degree4_spanner6(), bound, {{0, 1}});
    const FalsifyResult f = falsify_degree_bound(pentagon6(), 4, bound, 100000, 1);
    out.pass = out.pass && f.best_found >= bound - 1e-9;
    out.detail += "; search best " + fmt("%.12f", f.best_found);
    // hex13 already has 13 points, so its extensions start there.
    int deg4_ok = 0, deg3_ok = 0;
    for (int n = 7; n <= 20; ++n) {
        const ConstructionCheck c4 = verify(extended_construction(degree4_spanner6(), n), 1e-12);
        deg4_ok += c4.ok() && std::abs(c4.report.stretch - bound) <= 1e-12;
        if (n < 13) continue;
        const ConstructionCheck c3 = verify(extended_construction(degree3_spanner13(), n), 1e-12);
        deg3_ok += c3.ok() && std::abs(c3.report.stretch - (1.0 + std::sqrt(3.0))) <= 1e-12;
    }
    out.pass = out.pass && deg4_ok == 14 && deg3_ok == 8;
    out.detail += "; extensions deg4 n=7..20 " + std::to_string(deg4_ok) + "/14, deg3 n=13..20 " +
                  std::to_string(deg3_ok) + "/8";
    return out;
}

// 9. Greedy parallelogram family.
Outcome greedy_lower_bound() {
    Outcome out;
    const GreedyOptimum o = maximize_greedy_bound(1e-10);
    const PointSet p = parallelogram_six({o.alpha_star, 1e-4});
    const bool unique = greedy_is_tie_free(p);
    const DilationReport r = stretch_factor(greedy_triangulation(p));
    const VertexPair w = r.witness_pair.value_or(VertexPair{9, 9});
    out.pass = std::abs(o.alpha_star - 1.3416) <= 2e-3 && std::abs(o.value - 2.0268) <= 1e-4 && unique &&
               r.stretch > 2.026 && w == VertexPair{0, 3};
    out.detail = "alpha* " + fmt("%.6f", o.alpha_star) + " value " + fmt("%.6f", o.value) + ", greedy stretch " +
                 fmt("%.6f", r.stretch) + " witness (" + std::to_string(w.first) + "," + std::to_string(w.second) +
                 ")" + (unique ? " unique" : " has ties");
    return out;
}

// 10. Upper bounds for S25 and S26.
Outcome heuristic_bounds() {
    Outcome out;
    const LocalSearchResult r25 = local_search_min_dilation(25, 1000000, 1);
    const LocalSearchResult r26 = local_search_min_dilation(26, 1000000, 1);
    const double c25 = stretch_factor(realize(r25.triangulation)).stretch;
    const double c26 = stretch_factor(realize(r26.triangulation)).stretch;
    out.pass = r25.stretch < 1.4296 && r26.stretch < 1.4202 && std::abs(c25 - r25.stretch) <= 1e-9 &&
               std::abs(c26 - r26.stretch) <= 1e-9;
    out.detail = "n=25 " + fmt("%.10f", r25.stretch) + ", n=26 " + fmt("%.10f", r26.stretch);
    return out;
}

// 11. Reduced greedy experiment.
Outcome greedy_experiment(int workers) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentResult r = greedy_stretch_experiment(4, 60, 50, 20240601, workers);
    double lo = 1e300;
    for (const ExperimentRecord& rec : r.records) lo = std::min(lo, rec.stretch);
    out.pass = r.records.size() == 57 * 50 && r.summary.max_stretch < 2.03 && lo >= 1.0;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.detail = std::to_string(r.records.size()) + " records, max " + fmt("%.6f", r.summary.max_stretch) + ", min " +
                 fmt("%.6f", lo) + ", " + fmt("%.1fs", secs);
    return out;
}

// 12. Closed-form against coordinate-based stretch.
Outcome cross_oracle() {
    Outcome out;
    double worst = 0.0;
    for (int n : {8, 12, 15}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const ConvexTriangulation t = random_triangulation(n, derive_seed(1000 + static_cast<std::uint64_t>(n), s));
            worst = std::max(worst, std::abs(triangulation_stretch(t).stretch - stretch_factor(realize(t)).stretch));
        }
    }
    out.pass = worst <= 1e-9;
    out.detail = "300 triangulations, max difference " + fmt("%.2e", worst);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    }
    const int workers = default_workers();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"table of minimum dilations, n=4..16", [&] { return table_reproduction(workers); }},
        {"Catalan counts", catalan_counts},
        {"chord-ratio table", chord_ratio_table},
        {"S23 witness", [&] { return s23(extended, workers); }},
        {"pruning soundness", pruning_soundness},
        {"longest chord in S23", longest_chord_property},
        {"degree-3 bound on hex13", degree3},
        {"degree-4 bound on pentagon6", degree4},
        {"greedy parallelogram bound", greedy_lower_bound},
        {"heuristic upper bounds n=25,26", heuristic_bounds},
        {"greedy experiment", [&] { return greedy_experiment(workers); }},
        {"closed-form vs coordinate stretch", cross_oracle},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s [%2zu] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed%s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                extended ? " (extended)" : "");
    return failed == 0 ? 0 : 1;
}
