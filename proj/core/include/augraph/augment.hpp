#pragma once

#include <cstdint>
#include <string>

#include "augraph/graph.hpp"

namespace augraph {

struct EmbeddingTable;

// Domain-agnostic structural augmentations. Every function is a pure map
// (graph, ratio, seed) -> graph: equal inputs give equal outputs. Ratios live
// in [0, 1]; counts follow floor(ratio * pool size) unless stated otherwise.

// Removes min(n - 1, floor(ratio * n)) uniformly chosen distinct nodes and
// returns the induced subgraph on the survivors, ids compacted in relative
// order. A single-node graph is returned unchanged.
Graph node_drop(const Graph& g, double ratio, std::uint64_t seed);

// Removes r = floor(ratio * m) existing edges uniformly, then adds
// min(r, available) new edges drawn uniformly from the non-edges of the
// ORIGINAL graph, so additions never recreate a removed edge. Node set and
// features untouched; new edges get weight 1.0 on weighted graphs.
Graph edge_perturb(const Graph& g, double ratio, std::uint64_t seed);

// Sets every feature entry of floor(ratio * n) uniformly chosen nodes to
// mask_value. Structure untouched.
Graph attribute_mask(const Graph& g, double ratio, std::uint64_t seed,
                     double mask_value = 0.0);

// Subgraph dropping: a random walk from a uniform start node collects
// t = max(1, floor(ratio * n)) distinct nodes, restarting at a fresh uniform
// unvisited node when its component is exhausted; those t nodes are REMOVED
// and the induced subgraph on the rest is returned. Note ratio 0 still drops
// one node. Throws std::invalid_argument when n < 2 or the walk would
// collect all n nodes.
Graph subgraph_sample(const Graph& g, double ratio, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Uniform dispatch over every augmentation kind in the toolkit, including the
// context-aware ones (which need an embedding table; see text_augment.hpp).
// ---------------------------------------------------------------------------

enum class AugmentKind {
    Identity,
    NodeDrop,
    EdgePerturb,
    AttrMask,
    Subgraph,
    SynonymReplace,
    RandomInsert,
    RandomDeleteRewire,
    FeatureSwap,
    Colorize,
};

// CLI-facing names: identity, node-drop, edge-perturb, attr-mask, subgraph,
// synonym, insert, delete-rewire, feature-swap, colorize.
AugmentKind parse_augment_kind(const std::string& name);
const char* to_string(AugmentKind kind);

struct AugmentationSpec {
    AugmentKind kind = AugmentKind::Identity;
    double ratio = 0.0;
    std::uint64_t seed = 0;
};

// Validates the ratio range and kind name.
AugmentationSpec make_augmentation_spec(const std::string& kind, double ratio,
                                        std::uint64_t seed);

// Applies one augmentation. `table` is required for SynonymReplace and
// RandomInsert and ignored otherwise; passing nullptr for those kinds throws
// std::invalid_argument.
Graph apply(const AugmentationSpec& spec, const Graph& g,
            const EmbeddingTable* table = nullptr);

// Per-graph seeds are split_seed(spec.seed, graph index); labels, order and
// length are preserved.
GraphDataset apply_dataset(const AugmentationSpec& spec, const GraphDataset& ds,
                           const EmbeddingTable* table = nullptr);

}  // namespace augraph
