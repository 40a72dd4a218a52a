#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "augraph/dataset_io.hpp"
#include "augraph/graph.hpp"
#include "augraph_cli/cli.hpp"
#include "fixtures.hpp"

using namespace augraph;
namespace ts = augraph::testsup;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Runs the CLI in-process with stdout/stderr captured.
struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = cli::run(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("augraph_cli_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void put(const fs::path& p, const std::string& text) {
    std::ofstream o(p);
    o << text;
}

// Small two-class TU dataset on disk: rings vs paths with node labels.
fs::path small_tu_dir(const TempDir& dir) {
    GraphDataset ds;
    ds.name = "small";
    ds.class_count = 2;
    SplitMix64 rng(24);
    for (int i = 0; i < 12; ++i) {
        Graph g = (i % 2 == 0) ? ts::cycle_graph(8 + (i % 3)) : ts::path_graph(8 + (i % 3));
        g.node_labels.resize(g.node_count());
        for (auto& l : g.node_labels) l = static_cast<int>(rng.uniform_below(4));
        g.label = i % 2;
        ds.graphs.push_back(std::move(g));
    }
    ts::one_hot_from_node_labels(ds);
    const fs::path out = dir.path / "small";
    write_tu_dataset(ds, out);
    return out;
}

bool hex16(const std::string& s) {
    return s.size() == 16 && s.find_first_not_of("0123456789abcdef") == std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and usage errors") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"augment", "--help"}).code == 0);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"augment", "--no-such-flag"}).code == 2);
    // Required flags missing.
    CHECK(invoke({"augment"}).code == 2);
    // Out-of-range ratio is caught at parse time.
    TempDir dir("ratio");
    CHECK(invoke({"augment", "--input", dir / "x", "--op", "node-drop", "--ratio", "1.5",
                  "--seed", "1", "--out", dir / "y"})
              .code == 2);
}

TEST_CASE("data errors exit 1 and name the offender") {
    TempDir dir("missing");
    const CliResult res = invoke({"embed", "--input", dir / "nope", "--seed", "3", "--out",
                                  dir / "e.csv", "--labels-out", dir / "y.txt"});
    CHECK(res.code == 1);
    CHECK(res.err.find("nope") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "e.csv"));
    CHECK_FALSE(fs::exists(dir / "e.csv.manifest.json"));
}

TEST_CASE("failures never clobber existing outputs") {
    TempDir dir("clobber");
    put(dir / "e.csv", "sentinel\n");
    const CliResult res = invoke({"embed", "--input", dir / "nope", "--seed", "3", "--out",
                                  dir / "e.csv", "--labels-out", dir / "y.txt"});
    CHECK(res.code == 1);
    CHECK(slurp(dir / "e.csv") == "sentinel\n");
}

TEST_CASE("augment writes a dataset plus manifest, deterministically") {
    TempDir dir("augment");
    const fs::path input = small_tu_dir(dir);
    const auto args = [&](const std::string& out) {
        return std::vector<std::string>{"augment", "--input", input.string(), "--op",
                                        "node-drop",  "--ratio", "0.2", "--seed", "9",
                                        "--out",      dir / out};
    };
    CHECK(invoke(args("one")).code == 0);
    CHECK(invoke(args("two")).code == 0);

    for (const char* name :
         {"small_A.txt", "small_graph_indicator.txt", "small_graph_labels.txt",
          "small_node_labels.txt"}) {
        CAPTURE(name);
        CHECK(fs::exists(dir.path / "one" / name));
        CHECK(slurp(dir.path / "one" / name) == slurp(dir.path / "two" / name));
    }

    const json manifest = json::parse(slurp(dir.path / "one.manifest.json"));
    CHECK(manifest["subcommand"] == "augment");
    CHECK(manifest["version"].is_string());
    CHECK(manifest["argv"].size() == 11);
    CHECK(manifest["argv"][0] == "augment");
    CHECK(manifest["seeds"] == json::array({9}));
    REQUIRE(manifest["inputs"].is_object());
    for (const auto& [path, digest] : manifest["inputs"].items()) {
        CAPTURE(path);
        CHECK(hex16(digest.get<std::string>()));
    }
    CHECK(manifest["outputs"][0] == dir / "one");

    // The augmented dataset still loads and has the same shape.
    const GraphDataset out = load_tu_dataset(dir.path / "one");
    CHECK(out.size() == 12);
}

TEST_CASE("text pipeline: build-graph then augment") {
    TempDir dir("text");
    put(dir / "corpus.tsv", "1\tthe cat sat\n0\ta b a\n");
    put(dir / "vecs.txt", "the 1 0\ncat 0.9 0.1\nsat 0 1\na 0.5 0.5\nb 0.2 0.8\n");

    const CliResult built =
        invoke({"text", "build-graph", "--corpus", dir / "corpus.tsv", "--embeddings",
                dir / "vecs.txt", "--window", "2", "--out", dir / "graphs"});
    CHECK(built.code == 0);
    const GraphDataset ds = load_tu_dataset(dir.path / "graphs");
    REQUIRE(ds.size() == 2);
    CHECK(ds.graphs[0].node_count() == 3);
    CHECK(ds.graphs[1].node_count() == 2);
    CHECK(ds.graphs[1].edge_weights == std::vector<double>{2.0});
    CHECK(ds.graphs[0].token_count == 3);

    const CliResult aug = invoke({"text", "augment", "--input", dir / "graphs",
                                  "--embeddings", dir / "vecs.txt", "--config",
                                  "synonym=0.5,delete=0,insert=0.5,swap=0", "--seed", "4",
                                  "--out", dir / "aug"});
    CHECK(aug.code == 0);
    CHECK(load_tu_dataset(dir.path / "aug").size() == 2);
    CHECK(fs::exists(dir / "aug.manifest.json"));
}

TEST_CASE("fidelity report lists one entry per pair") {
    TempDir dir("fidelity");
    const fs::path input = small_tu_dir(dir);
    const CliResult res = invoke({"fidelity", "--a", input.string(), "--b", input.string(),
                                  "--out", dir / "fid.json"});
    CHECK(res.code == 0);
    const json rep = json::parse(slurp(dir / "fid.json"));
    REQUIRE(rep["pairs"].size() == 12);
    for (const auto& pair : rep["pairs"]) {
        CHECK(pair["spectral_score"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(pair["feature_similarity"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(pair["ssim"].is_null());
        CHECK(pair.contains("k"));
        CHECK(pair.contains("index"));
    }
}

TEST_CASE("embed, eval, sanity, audit and diag chain together") {
    TempDir dir("chain");
    const fs::path input = small_tu_dir(dir);

    CHECK(invoke({"embed", "--input", input.string(), "--layers", "3", "--hidden", "32",
                  "--seed", "7", "--out", dir / "e.csv", "--labels-out", dir / "y.txt"})
              .code == 0);
    const Matrix emb = read_matrix_csv(dir / "e.csv");
    CHECK(emb.rows() == 12);
    CHECK(emb.cols() == 96);
    CHECK(read_labels(dir / "y.txt").size() == 12);
    CHECK(fs::exists(dir / "e.csv.manifest.json"));

    const CliResult knn = invoke({"eval", "knn", "--emb", dir / "e.csv", "--labels",
                                  dir / "y.txt", "--k", "1", "--folds", "2", "--seed", "5",
                                  "--report", dir / "knn.json"});
    CHECK(knn.code == 0);
    const json knn_rep = json::parse(slurp(dir / "knn.json"));
    CHECK(knn_rep["folds"] == 2);
    CHECK(knn_rep["k"] == 1);
    CHECK(knn_rep["fold_accuracies"].size() == 2);
    CHECK(json::parse(knn.out)["mean_accuracy"] == knn_rep["mean_accuracy"]);

    const CliResult sim = invoke({"sanity", "sim-matrix", "--emb", dir / "e.csv", "--labels",
                                  dir / "y.txt", "--out", dir / "m.pgm", "--report",
                                  dir / "sim.json"});
    CHECK(sim.code == 0);
    const json sim_rep = json::parse(slurp(dir / "sim.json"));
    CHECK(sim_rep["n"] == 12);
    CHECK(sim_rep.contains("intra_mean"));
    CHECK(sim_rep.contains("inter_mean"));
    CHECK(sim_rep["passes"].is_boolean());
    CHECK(slurp(dir / "m.pgm").substr(0, 3) == "P2\n");

    const CliResult aud = invoke({"audit", "affinity", "--input", input.string(), "--op",
                                  "identity", "--ratio", "0", "--seed", "3", "--report",
                                  dir / "aff.json"});
    CHECK(aud.code == 0);
    const json aff = json::parse(slurp(dir / "aff.json"));
    CHECK(aff["affinity"].get<double>() == 0.0);
    CHECK(aff["diversity"].get<double>() == 0.0);
    CHECK(aff["clean_accuracy"] == aff["augmented_accuracy"]);
    CHECK(aff["op"] == "identity");

    const CliResult diag = invoke({"diag", "nt-xent", "--emb-a", dir / "e.csv", "--emb-b",
                                   dir / "e.csv", "--tau", "0.5"});
    CHECK(diag.code == 0);
    const json loss = json::parse(diag.out);
    CHECK(loss["n"] == 12);
    CHECK(loss["loss"].get<double>() > 0.0);
}

TEST_CASE("quiet suppresses progress notes") {
    TempDir dir("quiet");
    const fs::path input = small_tu_dir(dir);
    const CliResult loud = invoke({"augment", "--input", input.string(), "--op", "identity",
                                   "--ratio", "0", "--seed", "1", "--out", dir / "a"});
    CHECK(loud.out.find("wrote") != std::string::npos);
    const CliResult quiet =
        invoke({"--quiet", "augment", "--input", input.string(), "--op", "identity",
                "--ratio", "0", "--seed", "1", "--out", dir / "b"});
    CHECK(quiet.code == 0);
    CHECK(quiet.out.empty());
}

TEST_CASE("thread cap flag is accepted") {
    TempDir dir("threads");
    const fs::path input = small_tu_dir(dir);
    CHECK(invoke({"--threads", "1", "embed", "--input", input.string(), "--seed", "2",
                  "--out", dir / "e.csv", "--labels-out", dir / "y.txt"})
              .code == 0);
}

}  // TEST_SUITE
