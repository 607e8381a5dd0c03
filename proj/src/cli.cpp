#include "dilation/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dilation/constructions.hpp"
#include "dilation/convex_dilation.hpp"
#include "dilation/greedy.hpp"
#include "dilation/json_io.hpp"
#include "dilation/random.hpp"
#include "dilation/repro.hpp"
#include "dilation/svg.hpp"

namespace dilation {

using ojson = nlohmann::ordered_json;

int default_workers() {
    if (const char* env = std::getenv("DILATION_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace {

enum class Format { text, json, csv };

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string format_scalar(const ojson& v) {
    if (v.is_number_float()) {
        const double d = v.get<double>();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.10f", d);
        return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(std::ostream& out, Format format, const ojson& result) {
    switch (format) {
        case Format::json:
            out << result.dump(2) << '\n';
            return;
        case Format::text:
            for (const auto& [key, value] : result.items()) out << key << ": " << format_scalar(value) << '\n';
            return;
        case Format::csv: {
            std::string header;
            std::string row;
            bool first = true;
            for (const auto& [key, value] : result.items()) {
                std::string cell = format_scalar(value);
                if (cell.find_first_of(",\"") != std::string::npos) {
                    std::string quoted = "\"";
                    for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                    cell = quoted + "\"";
                }
                header += (first ? "" : ",") + key;
                row += (first ? "" : ",") + cell;
                first = false;
            }
            out << header << '\n' << row << '\n';
            return;
        }
    }
}

ojson pair_json(const std::optional<VertexPair>& p) {
    return p ? ojson::array({p->first, p->second}) : ojson(nullptr);
}

void add_report(ojson& j, const DilationReport& r) {
    if (std::isfinite(r.stretch)) {
        j["stretch"] = r.stretch;
    } else {
        j["stretch"] = "inf";
    }
    j["witness_pair"] = pair_json(r.witness_pair);
    j["witness_path"] = r.witness_path;
}

ojson diagonals_json(const ConvexTriangulation& t) {
    ojson a = ojson::array();
    for (const Edge& e : t.diagonals()) a.push_back({e.u, e.v});
    return a;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "seed: " << s << " (derived; pass --seed " << s << " to reproduce)\n";
    return s;
}

PointSet load_points(const std::string& spec) {
    if (spec == "hex13") return hex13();
    if (spec == "pentagon6") return pentagon6();
    return read_point_csv_file(spec);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("error writing " + path);
}

std::vector<DilationReport> witness_reports(const GeometricGraph& g, const std::vector<VertexPair>& pairs) {
    std::vector<DilationReport> out;
    for (const auto& [u, v] : pairs) {
        const ShortestPath sp = shortest_path(g, u, v);
        out.push_back({sp.length / g.vertices().distance(u, v), VertexPair{u, v}, sp.path});
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stretch factors of plane geometric graphs and minimum-dilation triangulations", "dilation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "dilation 1.0");

    Format format = Format::text;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    int workers = default_workers();

    std::function<void()> action;

    // ngon
    auto* ngon = app.add_subcommand("ngon", "Exact minimum dilation of the regular n-gon by enumeration");
    int ngon_n = 0;
    bool ngon_prune = false;
    std::optional<double> ngon_threshold;
    std::string ngon_out;
    ngon->add_option("--n", ngon_n, "Number of polygon vertices")->required()->check(CLI::Range(4, 64));
    ngon->add_flag("--prune", ngon_prune, "Branch-and-bound pruning");
    ngon->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    ngon->add_option("--threshold", ngon_threshold, "Report whether some triangulation lies below this value");
    ngon->add_option("--out", ngon_out, "Write the JSON report here");
    ngon->callback([&] {
        action = [&] {
            EnumerationOptions eo;
            eo.prune = ngon_prune;
            eo.workers = workers;
            eo.threshold = ngon_threshold;
            const auto t0 = std::chrono::steady_clock::now();
            const EnumerationResult r = min_dilation_convex(ngon_n, eo);
            const double wall = seconds_since(t0);
            const DilationReport rep = triangulation_stretch(r.argmin);
            ojson j;
            j["n"] = ngon_n;
            j["pruned"] = ngon_prune;
            j["count"] = r.count;
            if (ngon_prune) j["pruned_subtrees"] = r.pruned_subtrees;
            j["min_stretch"] = r.min_stretch;
            j["argmin"] = diagonals_json(r.argmin);
            j["witness_pair"] = pair_json(rep.witness_pair);
            j["witness_path"] = rep.witness_path;
            j["second_best"] = r.second_best ? ojson(*r.second_best) : ojson(nullptr);
            if (r.below_threshold) j["below_threshold"] = *r.below_threshold;
            j["workers"] = workers;
            j["wall_seconds"] = wall;
            emit(out, format, j);
            if (!ngon_out.empty()) write_text_file(ngon_out, j.dump(2) + "\n");
        };
    });

    // ngon-heuristic
    auto* heur = app.add_subcommand("ngon-heuristic", "Upper bound on the minimum dilation by edge-flip local search");
    int heur_n = 0;
    std::uint64_t heur_budget = 1000000;
    std::optional<std::uint64_t> heur_seed;
    heur->add_option("--n", heur_n, "Number of polygon vertices")->required()->check(CLI::Range(4, 200));
    heur->add_option("--budget", heur_budget, "Stretch evaluations")->check(CLI::PositiveNumber);
    heur->add_option("--seed", heur_seed, "RNG seed");
    heur->callback([&] {
        action = [&] {
            const std::uint64_t seed = resolve_seed(heur_seed, err);
            const auto t0 = std::chrono::steady_clock::now();
            const LocalSearchResult r = local_search_min_dilation(heur_n, heur_budget, seed);
            const DilationReport rep = triangulation_stretch(r.triangulation);
            ojson j;
            j["n"] = heur_n;
            j["seed"] = seed;
            j["rng"] = kRngName;
            j["budget"] = heur_budget;
            j["evaluations"] = r.evaluations;
            j["stretch"] = r.stretch;
            j["triangulation"] = diagonals_json(r.triangulation);
            j["witness_pair"] = pair_json(rep.witness_pair);
            j["witness_path"] = rep.witness_path;
            j["wall_seconds"] = seconds_since(t0);
            emit(out, format, j);
        };
    });

    // ngon-sample
    auto* sample = app.add_subcommand("ngon-sample", "Longest-chord statistics of random triangulations");
    int sample_n = 0;
    int sample_k = 10000;
    std::optional<std::uint64_t> sample_seed;
    sample->add_option("--n", sample_n, "Number of polygon vertices")->required()->check(CLI::Range(4, 500));
    sample->add_option("--samples", sample_k, "Number of triangulations")->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->callback([&] {
        action = [&] {
            const std::uint64_t seed = resolve_seed(sample_seed, err);
            // Some triangle contains the centre, so its longest side spans
            // at least n/3 of the hull.
            const int lo = (sample_n + 2) / 3;
            const int hi = sample_n / 2;
            std::map<int, std::uint64_t> counts;
            for (int k = 0; k < sample_k; ++k) {
                ++counts[longest_chord(random_triangulation(sample_n, derive_seed(seed, static_cast<std::uint64_t>(k))))];
            }
            bool holds = true;
            ojson hist = ojson::object();
            for (const auto& [len, c] : counts) {
                hist[std::to_string(len)] = c;
                holds = holds && len >= lo && len <= hi;
            }
            ojson j;
            j["n"] = sample_n;
            j["samples"] = sample_k;
            j["seed"] = seed;
            j["rng"] = kRngName;
            j["longest_chord_counts"] = hist;
            j["allowed_range"] = {lo, hi};
            j["property_holds"] = holds;
            emit(out, format, j);
        };
    });

    // construct
    auto* construct = app.add_subcommand("construct", "Build and verify a lower-bound construction");
    std::string con_name;
    std::optional<int> con_n;
    std::string con_svg, con_json;
    construct->add_option("--name", con_name, "Construction")->required()->check(CLI::IsMember({"s23", "deg3", "deg4"}));
    construct->add_option("--n", con_n, "Extend with collinear points up to n vertices");
    construct->add_option("--svg", con_svg, "Write an SVG drawing");
    construct->add_option("--json", con_json, "Write the graph and report as JSON");
    construct->callback([&] {
        action = [&] {
            NamedConstruction c = con_name == "s23" ? s23_witness()
                                 : con_name == "deg3" ? degree3_spanner13()
                                                      : degree4_spanner6();
            if (con_n) {
                if (con_name == "s23" && *con_n != 23) throw std::invalid_argument("s23 cannot be extended");
                c = extended_construction(c, *con_n);
            }
            const ConstructionCheck check = verify(c);
            ojson j;
            j["name"] = c.name;
            j["vertices"] = c.graph.vertex_count();
            j["edges"] = c.graph.edges().size();
            j["claimed_stretch"] = c.claimed_stretch;
            add_report(j, check.report);
            ojson claimed = ojson::array();
            for (const auto& [a, b] : c.claimed_witnesses) claimed.push_back({a, b});
            j["claimed_witnesses"] = claimed;
            j["max_degree"] = max_degree(c.graph);
            j["degree_cap"] = c.degree_cap ? ojson(*c.degree_cap) : ojson(nullptr);
            j["plane"] = check.plane;
            j["verified"] = check.ok();
            emit(out, format, j);
            if (!con_json.empty()) {
                nlohmann::json file = graph_to_json(c.graph);
                file["name"] = c.name;
                file["claimed_stretch"] = c.claimed_stretch;
                file["report"] = report_to_json(check.report);
                write_json_file(con_json, file);
            }
            if (!con_svg.empty()) render_svg(c.graph, witness_reports(c.graph, c.claimed_witnesses), con_svg);
            if (!check.ok()) throw std::runtime_error("verification failed: " + check.describe());
        };
    });

    // falsify
    auto* falsify = app.add_subcommand("falsify", "Search for a degree-capped plane graph beating a target stretch");
    std::string fal_points;
    int fal_cap = 3;
    double fal_target = 0.0;
    std::uint64_t fal_budget = 100000;
    std::optional<std::uint64_t> fal_seed;
    falsify->add_option("--points", fal_points, "CSV file, or hex13 / pentagon6")->required();
    falsify->add_option("--cap", fal_cap, "Maximum degree")->required()->check(CLI::Range(2, 1000));
    falsify->add_option("--target", fal_target, "Stretch to beat")->required();
    falsify->add_option("--budget", fal_budget, "Evaluations")->check(CLI::PositiveNumber);
    falsify->add_option("--seed", fal_seed, "RNG seed");
    falsify->callback([&] {
        action = [&] {
            const std::uint64_t seed = resolve_seed(fal_seed, err);
            const FalsifyResult r = falsify_degree_bound(load_points(fal_points), fal_cap, fal_target, fal_budget, seed);
            const DilationReport rep = stretch_factor(r.graph);
            ojson j;
            j["points"] = fal_points;
            j["cap"] = fal_cap;
            j["target"] = fal_target;
            j["seed"] = seed;
            j["rng"] = kRngName;
            j["evaluations"] = r.evaluations;
            j["best_found"] = r.best_found;
            j["beat_target"] = r.beat_target;
            j["witness_pair"] = pair_json(rep.witness_pair);
            ojson edges = ojson::array();
            for (const Edge& e : r.graph.edges()) edges.push_back({e.u, e.v});
            j["graph_edges"] = edges;
            emit(out, format, j);
        };
    });

    // greedy
    auto* greedy = app.add_subcommand("greedy", "Greedy triangulation of a point set and its stretch factor");
    std::string gr_points, gr_svg;
    greedy->add_option("--points", gr_points, "CSV file of x,y lines")->required();
    greedy->add_option("--svg", gr_svg, "Write an SVG drawing");
    greedy->callback([&] {
        action = [&] {
            const PointSet pts = load_points(gr_points);
            const GeometricGraph g = greedy_triangulation(pts);
            const DilationReport rep = stretch_factor(g, workers);
            ojson j;
            j["vertices"] = g.vertex_count();
            j["edges"] = g.edges().size();
            j["tie_free"] = greedy_is_tie_free(pts);
            add_report(j, rep);
            emit(out, format, j);
            if (!gr_svg.empty()) render_svg(g, std::optional<DilationReport>(rep), gr_svg);
        };
    });

    // greedy-bound
    auto* gbound = app.add_subcommand("greedy-bound", "Lower bound for greedy triangulations from the parallelogram family");
    std::optional<double> gb_alpha;
    bool gb_optimize = false;
    double gb_tol = 1e-9;
    auto* alpha_opt = gbound->add_option("--alpha", gb_alpha, "Angle in radians, in (pi/4, pi/2)");
    auto* opt_flag = gbound->add_flag("--optimize", gb_optimize, "Maximize over alpha");
    gbound->add_option("--tol", gb_tol, "Refinement tolerance on alpha")->check(CLI::PositiveNumber);
    alpha_opt->excludes(opt_flag);
    gbound->callback([&] {
        action = [&] {
            if (!gb_alpha && !gb_optimize) throw std::invalid_argument("greedy-bound needs --alpha or --optimize");
            ojson j;
            double alpha = 0.0;
            if (gb_optimize) {
                const GreedyOptimum o = maximize_greedy_bound(gb_tol);
                alpha = o.alpha_star;
                j["alpha_star"] = o.alpha_star;
                j["alpha_star_degrees"] = o.alpha_star * 180.0 / std::acos(-1.0);
                j["value"] = o.value;
            } else {
                alpha = *gb_alpha;
                j["alpha"] = alpha;
                j["value"] = greedy_bound(alpha);
            }
            const GreedyQuantities q = derived_quantities(alpha);
            j["a"] = q.a;
            j["b"] = q.b;
            j["x"] = q.x;
            j["one_plus_a"] = 1.0 + q.a;
            j["two_x_plus_b"] = 2.0 * q.x + q.b;
            emit(out, format, j);
        };
    });

    // greedy-experiment
    auto* gexp = app.add_subcommand("greedy-experiment", "Greedy stretch on uniform random point sets");
    int ge_min = 4, ge_max = 60, ge_trials = 50;
    std::optional<std::uint64_t> ge_seed;
    std::string ge_out;
    gexp->add_option("--n-min", ge_min, "Smallest n")->check(CLI::Range(4, 100000));
    gexp->add_option("--n-max", ge_max, "Largest n")->check(CLI::Range(4, 100000));
    gexp->add_option("--trials", ge_trials, "Trials per n")->check(CLI::PositiveNumber);
    gexp->add_option("--seed", ge_seed, "RNG seed");
    gexp->add_option("--out", ge_out, "Write per-trial records as CSV");
    gexp->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    gexp->callback([&] {
        action = [&] {
            const std::uint64_t seed = resolve_seed(ge_seed, err);
            const auto t0 = std::chrono::steady_clock::now();
            const ExperimentResult r = greedy_stretch_experiment(ge_min, ge_max, ge_trials, seed, workers);
            const ExperimentRecord& top = r.records[r.summary.argmax];
            ojson j;
            j["n_min"] = ge_min;
            j["n_max"] = ge_max;
            j["trials"] = ge_trials;
            j["seed"] = seed;
            j["rng"] = r.rng;
            j["records"] = r.records.size();
            j["max_stretch"] = r.summary.max_stretch;
            j["argmax"] = {{"n", top.n}, {"trial", top.trial}, {"seed", top.seed}};
            j["histogram_start"] = r.summary.histogram_start;
            j["histogram_width"] = r.summary.histogram_width;
            j["histogram"] = r.summary.histogram;
            j["wall_seconds"] = seconds_since(t0);
            emit(out, format, j);
            if (!ge_out.empty()) {
                std::ostringstream csv;
                csv << "# rng=" << r.rng << " seed=" << seed << "\n";
                csv << "n,trial,seed,stretch,wi,wj\n";
                char buf[40];
                for (const ExperimentRecord& rec : r.records) {
                    std::snprintf(buf, sizeof buf, "%.15f", rec.stretch);
                    csv << rec.n << ',' << rec.trial << ',' << rec.seed << ',' << buf << ',' << rec.witness_pair.first
                        << ',' << rec.witness_pair.second << '\n';
                }
                write_text_file(ge_out, csv.str());
            }
        };
    });

    // greedy-convex-subsets
    auto* gconv = app.add_subcommand("greedy-convex-subsets", "Largest greedy stretch over convex subsets");
    std::string gc_points;
    gconv->add_option("--points", gc_points, "CSV file with at most 16 points")->required();
    gconv->callback([&] {
        action = [&] {
            const PointSet pts = load_points(gc_points);
            const ConvexSubsetResult r = convex_subset_greedy_max(pts);
            ojson j;
            j["full_set_stretch"] = stretch_factor(greedy_triangulation(pts)).stretch;
            j["full_set_convex"] = in_convex_position(pts);
            j["best_convex_subset_stretch"] = r.best;
            j["best_subset"] = r.subset;
            emit(out, format, j);
        };
    });

    // repro
    auto* repro = app.add_subcommand("repro", "Recompute the minimum dilation table for regular polygons");
    ReproOptions ro;
    std::string repro_out;
    repro->add_option("--max-n", ro.max_n, "Largest n")->check(CLI::Range(4, 26));
    repro->add_flag("--extended", ro.extended, "Also run rows with n >= 19");
    repro->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    repro->add_option("--out", repro_out, "Write the JSON report here");
    repro->callback([&] {
        action = [&] {
            ro.workers = workers;
            const ReproductionReport r = reproduce_table(ro);
            if (format == Format::json) {
                out << to_json(r).dump(2) << '\n';
            } else if (format == Format::csv) {
                out << to_csv(r);
            } else {
                out << to_text(r);
            }
            if (!repro_out.empty()) write_text_file(repro_out, to_json(r).dump(2) + "\n");
            if (!r.all_pass()) throw std::runtime_error("some rows do not match their reference values");
        };
    });

    // stretch
    auto* stretch = app.add_subcommand("stretch", "Stretch factor of a graph given as JSON");
    std::string st_graph, st_svg;
    stretch->add_option("--graph", st_graph, "JSON {points, edges}")->required();
    stretch->add_option("--svg", st_svg, "Write an SVG drawing");
    stretch->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    stretch->callback([&] {
        action = [&] {
            const GeometricGraph g = read_graph_json_file(st_graph);
            const DilationReport rep = stretch_factor(g, workers);
            const PlaneCheck pc = validate_plane(g);
            ojson j;
            j["vertices"] = g.vertex_count();
            j["edges"] = g.edges().size();
            j["plane"] = pc.plane;
            if (!pc.plane) j["plane_violation"] = pc.describe();
            j["max_degree"] = max_degree(g);
            add_report(j, rep);
            emit(out, format, j);
            if (!st_svg.empty()) render_svg(g, std::optional<DilationReport>(rep), st_svg);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    try {
        if (action) action();
    } catch (const std::exception& e) {
        err << "dilation: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace dilation
