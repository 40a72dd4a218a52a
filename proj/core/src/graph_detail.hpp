#pragma once
// Internal helpers shared by the augmentation translation units. Not part of
// the installed API.

#include <vector>

#include "augraph/graph.hpp"

namespace augraph::detail {

// Induced subgraph on the nodes NOT flagged in `removed`, ids compacted in
// relative order. Label, token_count, features, node labels and edge weights
// carry over. Edge order stays canonical because the id map is monotone.
Graph induced_removal(const Graph& g, const std::vector<bool>& removed);

}  // namespace augraph::detail
