#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "augraph/dataset_io.hpp"
#include "augraph/graph.hpp"

namespace augraph {

// ---------------------------------------------------------------------------
// Token sequence -> co-occurrence graph
//
// Nodes are the distinct tokens of the document in first-appearance order.
// Two tokens are joined when some pair of their occurrences sits within
// window - 1 positions of each other; the edge weight counts those occurrence
// pairs. Features come from the embedding table (zero vector for
// out-of-vocabulary tokens). token_count records the sequence length and
// label carries the document label.
// ---------------------------------------------------------------------------

Graph build_cooccurrence(const Document& doc, std::size_t window,
                         const EmbeddingTable& table);

// ---------------------------------------------------------------------------
// Text-editing operations translated to graph space. Edit counts scale with
// the stored token_count (falling back to the node count when absent):
// m = floor(ratio * token_count). Sequence-level token order is gone after
// graph construction, so the ops manipulate nodes directly.
// ---------------------------------------------------------------------------

// Replaces the features of m uniformly chosen distinct nodes (m clamped to n)
// with the table vector of highest cosine similarity to the current feature,
// skipping exact matches of the current vector. Zero-feature nodes are left
// alone. Topology untouched.
Graph synonym_replace(const Graph& g, double ratio, const EmbeddingTable& table,
                      std::uint64_t seed);

// m insertions; each picks a uniform existing node u and a uniform table row,
// then appends a new node carrying that row with one edge to every current
// neighbour of u (weights copied).
Graph random_insert(const Graph& g, double ratio, const EmbeddingTable& table,
                    std::uint64_t seed);

// min(n - 1, m) sequential deletions; each removes a uniform node and then
// connects every pair of its former neighbours that was not already adjacent
// (weight 1.0).
Graph random_delete_rewire(const Graph& g, double ratio, std::uint64_t seed);

// m swaps; each exchanges the feature rows (and node labels, when present) of
// two distinct uniform nodes. Topology untouched.
Graph feature_swap(const Graph& g, double ratio, std::uint64_t seed);

struct ContextAugConfig {
    double synonym_ratio = 0.05;
    double delete_ratio = 0.10;
    double insert_ratio = 0.05;
    double swap_ratio = 0.05;
    std::uint64_t seed = 0;
};

// Parses "synonym=0.05,delete=0.10,insert=0.05,swap=0.05" (any subset, any
// order; unmentioned ratios keep their defaults). Throws on unknown keys or
// ratios outside [0,1].
ContextAugConfig parse_context_config(const std::string& text);

// Applies synonym_replace, random_insert, feature_swap, random_delete_rewire
// in that fixed order, with sub-seeds split_seed(config.seed, 0..3).
Graph apply_context(const ContextAugConfig& config, const Graph& g,
                    const EmbeddingTable& table);

// ---------------------------------------------------------------------------
// Colorize, for super-pixel graphs with feature layout [intensity, x, y].
// Draws one color (r, g, b) uniformly from [0,1]^3 per graph and expands the
// features to [intensity*r, intensity*g, intensity*b, x, y]. Topology
// untouched. Throws std::invalid_argument when feature_dim() != 3.
// ---------------------------------------------------------------------------

Graph colorize(const Graph& g, std::uint64_t seed);

// Same transform with the color fixed by the caller.
Graph colorize_with(const Graph& g, double r, double green, double b);

// Per-graph seeds split_seed(seed, index).
GraphDataset colorize(const GraphDataset& ds, std::uint64_t seed);

}  // namespace augraph
