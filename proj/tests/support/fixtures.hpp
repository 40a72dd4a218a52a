#pragma once
// Shared builders for test graphs and datasets.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "augraph/dataset_io.hpp"
#include "augraph/graph.hpp"
#include "augraph/matrix.hpp"
#include "augraph/rng.hpp"

namespace augraph::testsup {

// n nodes with constant-1 features of width `dim`, edges normalized.
Graph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                 std::size_t dim = 1);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Node 0 is the hub.
Graph star_graph(std::size_t leaves);

// Relabels b's nodes after a's; no cross edges.
Graph disjoint_union(const Graph& a, const Graph& b);

// Random attributed graph: n in [n_min, n_max], edge density drawn per graph,
// uniform [0,1) features of width dim, coin-flipped edge weights, node labels
// (0..6) and token_count (n..3n-1).
Graph random_graph(SplitMix64& rng, std::size_t n_min, std::size_t n_max, std::size_t dim);

EmbeddingTable make_table(std::vector<std::string> words, Matrix vectors);

// Mirrors the TU loader: one-hot features over the sorted alphabet of all
// node labels in the dataset.
void one_hot_from_node_labels(GraphDataset& ds);

// Deterministic stand-in for a small molecule benchmark: 188 graphs, two
// classes (63 trees / 125 rings), sizes 10..28, node labels drawn 0..6
// independent of class so the only class signal is the topology.
GraphDataset two_class_topology_fixture();

// two_class_topology_fixture(), or the TU dataset in $AUGRAPH_MUTAG_DIR when
// that variable is set (for running the acceptance gate against real data).
GraphDataset acceptance_dataset(std::string* source_note = nullptr);

}  // namespace augraph::testsup
