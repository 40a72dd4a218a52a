#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "augraph/augment.hpp"
#include "augraph/rng.hpp"
#include "augraph/text_augment.hpp"
#include "fixtures.hpp"

using namespace augraph;
namespace ts = augraph::testsup;

namespace {

Graph tagged_path(std::size_t n) {
    Graph g = ts::path_graph(n);
    g.features = Matrix(n, 1);
    for (std::size_t i = 0; i < n; ++i) g.features.at(i, 0) = static_cast<double>(i);
    g.label = 1;
    return g;
}

}  // namespace

TEST_SUITE("augment") {

TEST_CASE("node_drop removes min(n-1, floor(ratio*n)) nodes") {
    const Graph g = tagged_path(10);
    CHECK(node_drop(g, 0.25, 3).node_count() == 8);
    CHECK(node_drop(g, 0.999, 3).node_count() == 1);  // floor(9.99) = 9 dropped
    CHECK(node_drop(g, 1.0, 3).node_count() == 1);    // clamped to n - 1
    CHECK(node_drop(g, 0.0, 3) == g);
}

TEST_CASE("node_drop keeps survivor features in relative order") {
    const Graph g = tagged_path(10);
    const Graph out = node_drop(g, 0.3, 42);
    REQUIRE(out.node_count() == 7);
    for (std::size_t i = 0; i + 1 < out.node_count(); ++i)
        CHECK(out.features.at(i, 0) < out.features.at(i + 1, 0));
    CHECK(out.label == g.label);
    CHECK(validate(out).empty());
}

TEST_CASE("node_drop on a single node is the identity") {
    const Graph g = tagged_path(1);
    CHECK(node_drop(g, 1.0, 5) == g);
}

TEST_CASE("node_drop induces the subgraph on survivors") {
    // Dropping one node of K3 must leave exactly one edge.
    const Graph g = ts::complete_graph(3);
    const Graph out = node_drop(g, 0.34, 9);  // floor(1.02) = 1 node dropped
    CHECK(out.node_count() == 2);
    CHECK(out.edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("node_drop rejects ratios outside [0,1]") {
    CHECK_THROWS_AS(node_drop(tagged_path(4), 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(node_drop(tagged_path(4), -0.1, 0), std::invalid_argument);
}

TEST_CASE("edge_perturb swaps floor(ratio*m) edges for fresh non-edges") {
    const Graph g = ts::path_graph(5);  // 4 edges, 6 non-edges
    const Graph out = edge_perturb(g, 0.5, 7);
    CHECK(out.node_count() == 5);
    CHECK(out.features == g.features);
    CHECK(out.edges.size() == 4);  // 2 removed, 2 added
    const std::set<Edge> orig(g.edges.begin(), g.edges.end());
    std::size_t kept = 0;
    for (const auto& e : out.edges) kept += orig.count(e);
    CHECK(kept == 2);
    CHECK(validate(out).empty());
    CHECK(edge_perturb(g, 0.0, 7) == g);
}

TEST_CASE("edge_perturb on a complete graph only removes") {
    const Graph g = ts::complete_graph(4);  // 6 edges, no room to add
    const Graph out = edge_perturb(g, 0.5, 11);
    CHECK(out.edges.size() == 3);
}

TEST_CASE("edge_perturb gives new edges weight 1 and keeps old weights") {
    Graph g = ts::path_graph(4);
    g.edge_weights = {5.0, 6.0, 7.0};
    const Graph out = edge_perturb(g, 0.34, 2);  // 1 out, 1 in
    REQUIRE(out.edge_weights.size() == out.edges.size());
    const std::set<Edge> orig(g.edges.begin(), g.edges.end());
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
        if (orig.count(out.edges[i]))
            CHECK(out.edge_weights[i] >= 5.0);
        else
            CHECK(out.edge_weights[i] == 1.0);
    }
}

TEST_CASE("attribute_mask zeroes exactly floor(ratio*n) rows") {
    Graph g = tagged_path(10);
    g.features = Matrix(10, 3, 2.5);
    const Graph out = attribute_mask(g, 0.45, 13);  // 4 rows
    std::size_t masked = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        const auto row = out.features.row(i);
        if (std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; })) ++masked;
    }
    CHECK(masked == 4);
    CHECK(out.edges == g.edges);
    CHECK(attribute_mask(g, 0.0, 13) == g);
}

TEST_CASE("attribute_mask honors a custom mask value") {
    Graph g = tagged_path(4);
    const Graph out = attribute_mask(g, 0.5, 1, -3.0);
    std::size_t hit = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (out.features.at(i, 0) == -3.0) ++hit;
    CHECK(hit == 2);
}

TEST_CASE("subgraph_sample drops the walk, not the rest") {
    const Graph g = tagged_path(10);
    SUBCASE("ratio 0 still removes one node") {
        CHECK(subgraph_sample(g, 0.0, 3).node_count() == 9);
    }
    SUBCASE("count formula") {
        CHECK(subgraph_sample(g, 0.52, 3).node_count() == 5);
    }
    SUBCASE("result is valid and deterministic") {
        const Graph out = subgraph_sample(g, 0.4, 17);
        CHECK(validate(out).empty());
        CHECK(out == subgraph_sample(g, 0.4, 17));
    }
    SUBCASE("walk crosses components via restarts") {
        const Graph two = ts::disjoint_union(ts::complete_graph(3), ts::complete_graph(3));
        const Graph out = subgraph_sample(two, 0.67, 5);  // t = 4 spans both triangles
        CHECK(out.node_count() == 2);
        CHECK(validate(out).empty());
    }
}

TEST_CASE("subgraph_sample rejects degenerate inputs") {
    CHECK_THROWS_AS(subgraph_sample(tagged_path(1), 0.5, 0), std::invalid_argument);
    // ratio 1 would collect every node.
    CHECK_THROWS_AS(subgraph_sample(tagged_path(5), 1.0, 0), std::invalid_argument);
}

TEST_CASE("augmentation kinds parse and print") {
    CHECK(parse_augment_kind("node-drop") == AugmentKind::NodeDrop);
    CHECK(parse_augment_kind("identity") == AugmentKind::Identity);
    CHECK(parse_augment_kind("synonym") == AugmentKind::SynonymReplace);
    CHECK(parse_augment_kind("delete-rewire") == AugmentKind::RandomDeleteRewire);
    CHECK(parse_augment_kind("colorize") == AugmentKind::Colorize);
    for (AugmentKind k :
         {AugmentKind::Identity, AugmentKind::NodeDrop, AugmentKind::EdgePerturb,
          AugmentKind::AttrMask, AugmentKind::Subgraph, AugmentKind::SynonymReplace,
          AugmentKind::RandomInsert, AugmentKind::RandomDeleteRewire, AugmentKind::FeatureSwap,
          AugmentKind::Colorize})
        CHECK(parse_augment_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_augment_kind("definitely-not-an-op"), std::invalid_argument);
}

TEST_CASE("make_augmentation_spec validates the ratio") {
    CHECK_THROWS_AS(make_augmentation_spec("node-drop", 1.0001, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_augmentation_spec("node-drop", -0.5, 0), std::invalid_argument);
    const auto spec = make_augmentation_spec("edge-perturb", 0.2, 99);
    CHECK(spec.kind == AugmentKind::EdgePerturb);
    CHECK(spec.ratio == 0.2);
    CHECK(spec.seed == 99);
}

TEST_CASE("apply dispatches and identity is exact") {
    const Graph g = tagged_path(6);
    CHECK(apply({AugmentKind::Identity, 0.9, 4}, g) == g);
    CHECK(apply({AugmentKind::NodeDrop, 0.5, 4}, g) == node_drop(g, 0.5, 4));
    CHECK_THROWS_AS(apply({AugmentKind::SynonymReplace, 0.5, 4}, g, nullptr),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply({AugmentKind::RandomInsert, 0.5, 4}, g, nullptr),
                    std::invalid_argument);
}

TEST_CASE("apply_dataset derives per-graph seeds from the index") {
    GraphDataset ds;
    ds.class_count = 2;
    ds.graphs = {tagged_path(8), tagged_path(12)};
    ds.graphs[0].label = 0;
    const AugmentationSpec spec{AugmentKind::NodeDrop, 0.5, 77};
    const GraphDataset out = apply_dataset(spec, ds);
    REQUIRE(out.size() == 2);
    CHECK(out.graphs[0] == node_drop(ds.graphs[0], 0.5, split_seed(77, 0)));
    CHECK(out.graphs[1] == node_drop(ds.graphs[1], 0.5, split_seed(77, 1)));
    CHECK(out.graphs[0].label == ds.graphs[0].label);
    CHECK(out.name == ds.name);
    CHECK(out.class_count == 2);
}

TEST_CASE("apply_dataset outcome depends on dataset position") {
    // Documented consequence of index-derived seeds: the same graph augments
    // differently at a different index.
    GraphDataset fwd, rev;
    fwd.class_count = rev.class_count = 1;
    const Graph a = tagged_path(9), b = tagged_path(11);
    fwd.graphs = {a, b};
    rev.graphs = {b, a};
    for (auto* ds : {&fwd, &rev})
        for (auto& g : ds->graphs) g.label = 0;
    const AugmentationSpec spec{AugmentKind::NodeDrop, 0.4, 123};
    const GraphDataset out_fwd = apply_dataset(spec, fwd);
    const GraphDataset out_rev = apply_dataset(spec, rev);
    CHECK(out_fwd.graphs[0] != out_rev.graphs[1]);
}

}  // TEST_SUITE
