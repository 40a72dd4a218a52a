#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "augraph/encoder.hpp"
#include "augraph/rng.hpp"
#include "fixtures.hpp"

using namespace augraph;
namespace ts = augraph::testsup;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Applies a node permutation: perm[i] is the new index of old node i.
Graph permuted(const Graph& g, const std::vector<std::uint32_t>& perm) {
    Graph out = g;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        std::copy(g.features.row(i).begin(), g.features.row(i).end(),
                  out.features.row(perm[i]).begin());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out.edges[e] = make_edge(perm[g.edges[e].u], perm[g.edges[e].v]);
    normalize_edges(out);
    return out;
}

Graph random_feature_graph(SplitMix64& rng, std::size_t n, std::size_t dim) {
    Graph g = ts::random_graph(rng, n, n, dim);
    g.edge_weights.clear();
    return g;
}

}  // namespace

TEST_SUITE("encoder") {

TEST_CASE("init produces the configured shapes deterministically") {
    const EncoderConfig cfg{.layers = 3, .hidden_dim = 32, .epsilon = 0.0, .seed = 9};
    const Encoder enc = init_encoder(cfg, 7);
    REQUIRE(enc.layers.size() == 3);
    CHECK(enc.input_dim == 7);
    CHECK(enc.embedding_dim() == 96);
    CHECK(enc.layers[0].w1.rows() == 7);
    CHECK(enc.layers[0].w1.cols() == 32);
    CHECK(enc.layers[1].w1.rows() == 32);
    CHECK(enc.layers[2].w2.rows() == 32);
    CHECK(enc.layers[2].w2.cols() == 32);

    const Encoder again = init_encoder(cfg, 7);
    for (std::size_t l = 0; l < 3; ++l) {
        CHECK(enc.layers[l].w1 == again.layers[l].w1);
        CHECK(enc.layers[l].w2 == again.layers[l].w2);
    }
    EncoderConfig other = cfg;
    other.seed = 10;
    CHECK(init_encoder(other, 7).layers[0].w1 != enc.layers[0].w1);
}

TEST_CASE("weights respect the uniform glorot bound") {
    const Encoder enc = init_encoder({.layers = 2, .hidden_dim = 16, .epsilon = 0, .seed = 3}, 5);
    const auto check_bound = [](const Matrix& w) {
        const double a =
            std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
        for (double v : w.data()) {
            CHECK(v <= a);
            CHECK(v >= -a);
        }
    };
    for (const auto& layer : enc.layers) {
        check_bound(layer.w1);
        check_bound(layer.w2);
    }
}

TEST_CASE("embedding length and determinism") {
    SplitMix64 rng(5);
    const Graph g = random_feature_graph(rng, 10, 4);
    const Encoder enc = init_encoder({.layers = 3, .hidden_dim = 8, .epsilon = 0, .seed = 1}, 4);
    const auto e1 = embed(enc, g);
    CHECK(e1.size() == 24);
    CHECK(e1 == embed(enc, g));
}

TEST_CASE("embedding ignores edge weights") {
    SplitMix64 rng(6);
    Graph g = random_feature_graph(rng, 8, 3);
    const Encoder enc = init_encoder({.layers = 2, .hidden_dim = 8, .epsilon = 0, .seed = 2}, 3);
    const auto plain = embed(enc, g);
    g.edge_weights.assign(g.edges.size(), 3.5);
    CHECK(embed(enc, g) == plain);
}

TEST_CASE("epsilon is wired into the update") {
    SplitMix64 rng(7);
    const Graph g = random_feature_graph(rng, 8, 3);
    const auto base = embed(init_encoder({2, 8, 0.0, 11}, 3), g);
    const auto eps = embed(init_encoder({2, 8, 1.0, 11}, 3), g);
    CHECK(max_abs_diff(base, eps) > 0.0);
}

TEST_CASE("embedding is invariant under node permutation") {
    SplitMix64 rng(8);
    const Encoder enc = init_encoder({.layers = 3, .hidden_dim = 16, .epsilon = 0, .seed = 4}, 4);
    for (int round = 0; round < 20; ++round) {
        const Graph g = random_feature_graph(rng, 4 + rng.uniform_below(12), 4);
        std::vector<std::uint32_t> perm(g.node_count());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
        shuffle(rng, perm);
        CHECK(max_abs_diff(embed(enc, g), embed(enc, permuted(g, perm))) < 1e-9);
    }
}

TEST_CASE("disjoint unions embed additively") {
    SplitMix64 rng(9);
    const Encoder enc = init_encoder({.layers = 3, .hidden_dim = 16, .epsilon = 0, .seed = 5}, 4);
    for (int round = 0; round < 20; ++round) {
        const Graph a = random_feature_graph(rng, 3 + rng.uniform_below(8), 4);
        const Graph b = random_feature_graph(rng, 3 + rng.uniform_below(8), 4);
        const auto ea = embed(enc, a);
        const auto eb = embed(enc, b);
        std::vector<double> sum(ea.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
        CHECK(max_abs_diff(embed(enc, ts::disjoint_union(a, b)), sum) < 1e-9);
    }
}

TEST_CASE("an empty graph embeds to zero") {
    Graph g;
    g.features = Matrix(0, 4);
    const Encoder enc = init_encoder({.layers = 2, .hidden_dim = 8, .epsilon = 0, .seed = 6}, 4);
    const auto e = embed(enc, g);
    CHECK(std::all_of(e.begin(), e.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("embed_dataset matches per-graph embed and copies labels") {
    SplitMix64 rng(10);
    GraphDataset ds;
    ds.class_count = 3;
    for (int i = 0; i < 6; ++i) {
        Graph g = random_feature_graph(rng, 5 + rng.uniform_below(6), 4);
        g.label = i % 3;
        ds.graphs.push_back(std::move(g));
    }
    const Encoder enc = init_encoder({.layers = 3, .hidden_dim = 8, .epsilon = 0, .seed = 7}, 4);
    const EmbeddingMatrix emb = embed_dataset(enc, ds);
    REQUIRE(emb.rows.rows() == 6);
    REQUIRE(emb.rows.cols() == 24);
    CHECK(emb.labels == std::vector<int>{0, 1, 2, 0, 1, 2});
    for (std::size_t i = 0; i < 6; ++i) {
        const auto direct = embed(enc, ds.graphs[i]);
        CHECK(std::equal(direct.begin(), direct.end(), emb.rows.row(i).begin()));
    }
}

}  // TEST_SUITE
