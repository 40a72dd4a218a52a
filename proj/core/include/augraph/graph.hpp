#pragma once
// Attributed undirected graph model shared by every module.
//
// Edges are stored canonically: u < v, sorted lexicographically, no
// duplicates, no self-loops. All builders in this repository go through
// normalize_edges() so that structural equality is plain field equality.

#include "augraph/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace augraph {

struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonical form regardless of argument order.
inline Edge make_edge(std::uint32_t a, std::uint32_t b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct Graph {
    Matrix features;                    // n rows, one per node
    std::vector<Edge> edges;            // canonical, sorted, unique
    std::vector<double> edge_weights;   // empty, or one positive weight per edge
    std::optional<int> label;           // graph-level class id
    std::vector<int> node_labels;       // empty, or one categorical label per node
    std::optional<std::size_t> token_count;  // source sentence length for text graphs

    std::size_t node_count() const { return features.rows(); }
    std::size_t feature_dim() const { return features.cols(); }
    bool has_edge(std::uint32_t a, std::uint32_t b) const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Sorts edges canonically, drops self-loops and duplicates, and keeps
// edge weights aligned (first occurrence wins for duplicates).
void normalize_edges(Graph& g);

// One adjacency list per node, neighbor indices ascending.
std::vector<std::vector<std::uint32_t>> adjacency_lists(const Graph& g);

// Empty iff all Graph invariants hold; each violation names the invariant
// and the offending index. Violations are data, not failures.
std::vector<std::string> validate(const Graph& g);

// Number of incident edges. Throws std::out_of_range for a bad index.
std::size_t degree(const Graph& g, std::size_t node);

// Maximal connected node sets; parts are sorted internally and ordered by
// their smallest member, together forming a partition of [0, n).
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

// Where node features came from, so the TU writer can round-trip a dataset
// without inventing attribute files.
enum class FeatureSource { Attributes, OneHotNodeLabels, ConstantOne };

struct GraphDataset {
    std::vector<Graph> graphs;
    std::string name;
    int class_count = 0;
    FeatureSource feature_source = FeatureSource::Attributes;

    std::size_t size() const { return graphs.size(); }
    std::size_t feature_dim() const { return graphs.empty() ? 0 : graphs.front().feature_dim(); }
};

// Dataset-level invariants: labels present and in [0, class_count), common
// feature dimension, plus per-graph validate() of every member.
std::vector<std::string> validate(const GraphDataset& ds);

}  // namespace augraph
