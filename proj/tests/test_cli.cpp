#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dilation/cli.hpp"
#include "dilation/constructions.hpp"
#include "dilation/svg.hpp"

using namespace dilation;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "dilation_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("svg rendering") {
    const GeometricGraph sq(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const std::string doc = svg_document(sq);
    CHECK(count(doc, "<line ") == 4);
    CHECK(count(doc, "r=\"3\"") == 4);
    CHECK(doc == svg_document(sq));

    const NamedConstruction c = s23_witness();
    const DilationReport r = stretch_factor(c.graph);
    const std::string with = svg_document(c.graph, {r});
    CHECK(with.find("id=\"witness-0\"") != std::string::npos);
    CHECK(with.find("<polyline") != std::string::npos);
    CHECK(with.find("(10,21)") != std::string::npos);

    const auto path = scratch_dir() / "s23.svg";
    render_svg(c.graph, std::optional<DilationReport>(r), path.string());
    const std::string first = slurp(path);
    render_svg(c.graph, std::optional<DilationReport>(r), path.string());
    CHECK(first == slurp(path));
    CHECK(first == with);
    CHECK_THROWS(render_svg(c.graph, std::optional<DilationReport>(), "/nonexistent-dir/x.svg"));
}

TEST_CASE("cli ngon") {
    const Run r = cli({"ngon", "--n", "12"});
    CHECK(r.status == 0);
    CHECK(r.out.find("min_stretch: 1.3836") != std::string::npos);

    const Run j = cli({"ngon", "--n", "9", "--prune", "--workers", "2", "--format", "json"});
    REQUIRE(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(std::floor(doc["min_stretch"].get<double>() * 1e4) / 1e4 == doctest::Approx(1.3472));
    CHECK(doc["argmin"].size() == 6);
    CHECK(doc.contains("witness_pair"));
    CHECK(doc.contains("wall_seconds"));
    CHECK(doc["count"].get<std::uint64_t>() > 0);
}

TEST_CASE("cli construct") {
    const auto dir = scratch_dir();
    const Run r = cli({"construct", "--name", "deg4", "--format", "json", "--svg", (dir / "deg4.svg").string(), "--json",
                       (dir / "deg4.json").string()});
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(std::abs(doc["stretch"].get<double>() - degree4_bound()) < 1e-12);
    CHECK(doc["verified"].get<bool>());
    CHECK(std::filesystem::exists(dir / "deg4.svg"));
    const auto file = nlohmann::json::parse(slurp(dir / "deg4.json"));
    CHECK(file["edges"].size() == 9);

    const Run ext = cli({"construct", "--name", "deg3", "--n", "16", "--format", "json"});
    REQUIRE(ext.status == 0);
    CHECK(nlohmann::json::parse(ext.out)["vertices"] == 16);

    CHECK(cli({"construct", "--name", "bogus"}).status != 0);
    CHECK(cli({"construct", "--name", "s23", "--n", "30"}).status != 0);
}

TEST_CASE("cli greedy commands") {
    const auto dir = scratch_dir();
    {
        std::ofstream f(dir / "square.csv");
        f << "# unit square\n0,0\n1,0\n1,1\n0,1\n";
    }
    const Run g = cli({"greedy", "--points", (dir / "square.csv").string(), "--svg", (dir / "sq.svg").string()});
    CHECK(g.status == 0);
    CHECK(g.out.find("stretch: 1.4142135624") != std::string::npos);
    CHECK(g.out.find("tie_free: false") != std::string::npos);

    const Run b = cli({"greedy-bound", "--optimize", "--tol", "1e-9", "--format", "json"});
    REQUIRE(b.status == 0);
    CHECK(std::abs(nlohmann::json::parse(b.out)["value"].get<double>() - 2.0268) < 1e-4);
    CHECK(cli({"greedy-bound", "--alpha", "1.3416"}).out.find("value: 2.026") != std::string::npos);
    CHECK(cli({"greedy-bound"}).status != 0);
    CHECK(cli({"greedy-bound", "--alpha", "0.5"}).status != 0);

    const auto csv = dir / "records.csv";
    const Run e = cli({"greedy-experiment", "--n-min", "4", "--n-max", "6", "--trials", "3", "--seed", "5", "--out",
                       csv.string()});
    REQUIRE(e.status == 0);
    const std::string text = slurp(csv);
    CHECK(text.find("n,trial,seed,stretch,wi,wj\n") != std::string::npos);
    CHECK(text.find("rng=mt19937_64") != std::string::npos);
    CHECK(count(text, "\n") == 11);
    // Same seed, same file.
    REQUIRE(cli({"greedy-experiment", "--n-min", "4", "--n-max", "6", "--trials", "3", "--seed", "5", "--out",
                 csv.string()})
                .status == 0);
    CHECK(slurp(csv) == text);

    const Run c = cli({"greedy-convex-subsets", "--points", (dir / "square.csv").string()});
    CHECK(c.status == 0);
    CHECK(c.out.find("best_convex_subset_stretch: 1.4142135624") != std::string::npos);
}

TEST_CASE("cli randomized commands print a derived seed") {
    const Run r = cli({"ngon-heuristic", "--n", "8", "--budget", "200"});
    CHECK(r.status == 0);
    CHECK(r.err.find("seed: ") != std::string::npos);
    const Run s = cli({"ngon-sample", "--n", "23", "--samples", "200", "--seed", "1"});
    CHECK(s.status == 0);
    CHECK(s.out.find("property_holds: true") != std::string::npos);
    CHECK(s.err.empty());
}

TEST_CASE("cli falsify and stretch") {
    const Run f = cli({"falsify", "--points", "hex13", "--cap", "3", "--target", "2.7320508075688772", "--budget", "300",
                       "--seed", "1", "--format", "json"});
    REQUIRE(f.status == 0);
    CHECK(nlohmann::json::parse(f.out)["best_found"].get<double>() >= degree3_bound() - 1e-9);

    const auto dir = scratch_dir();
    REQUIRE(cli({"construct", "--name", "deg3", "--json", (dir / "deg3.json").string()}).status == 0);
    const Run s = cli({"stretch", "--graph", (dir / "deg3.json").string()});
    CHECK(s.status == 0);
    CHECK(s.out.find("stretch: 2.7320508076") != std::string::npos);
    CHECK(s.out.find("plane: true") != std::string::npos);
}

TEST_CASE("cli repro") {
    const Run r = cli({"repro", "--max-n", "10", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["all_pass"].get<bool>());
    CHECK(doc["rows"].size() == 7);
    const Run skipped = cli({"repro", "--max-n", "20"});
    CHECK(skipped.status == 0);
    CHECK(skipped.out.find("needs --extended") != std::string::npos);
    const Run csv = cli({"repro", "--max-n", "6", "--format", "csv"});
    CHECK(csv.out.rfind("n,method,computed", 0) == 0);
}

TEST_CASE("cli errors") {
    CHECK(cli({}).status != 0);
    CHECK(cli({"frobnicate"}).status != 0);
    CHECK(cli({"ngon"}).status != 0);
    CHECK(cli({"ngon", "--n", "3"}).status != 0);
    CHECK(cli({"greedy", "--points", "/nonexistent.csv"}).status != 0);
    CHECK(cli({"ngon", "--n", "6", "--out", "/nonexistent-dir/r.json"}).status != 0);
    CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("worker default honours the environment") {
    ::setenv("DILATION_WORKERS", "3", 1);
    CHECK(default_workers() == 3);
    ::setenv("DILATION_WORKERS", "zero", 1);
    CHECK(default_workers() >= 1);
    ::unsetenv("DILATION_WORKERS");
    CHECK(default_workers() >= 1);
}
