#include "augraph/augment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "augraph/parallel.hpp"
#include "augraph/rng.hpp"
#include "augraph/text_augment.hpp"
#include "graph_detail.hpp"

namespace augraph {

using detail::induced_removal;

namespace {

void check_ratio(double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw std::invalid_argument("augmentation ratio must lie in [0, 1]");
}

}  // namespace

Graph node_drop(const Graph& g, double ratio, std::uint64_t seed) {
    check_ratio(ratio);
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("node_drop: empty graph");
    const std::size_t m =
        std::min(n - 1, static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n))));
    if (m == 0) return g;

    SplitMix64 rng(seed);
    std::vector<bool> removed(n, false);
    for (std::size_t idx : sample_distinct(rng, n, m)) removed[idx] = true;
    return induced_removal(g, removed);
}

Graph edge_perturb(const Graph& g, double ratio, std::uint64_t seed) {
    check_ratio(ratio);
    const std::size_t n = g.node_count();
    const std::size_t m = g.edges.size();
    const std::size_t r = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(m)));
    if (r == 0) return g;

    SplitMix64 rng(seed);
    std::vector<bool> drop(m, false);
    for (std::size_t idx : sample_distinct(rng, m, r)) drop[idx] = true;

    // Non-edges of the ORIGINAL graph, so additions can never recreate a
    // removed edge.
    std::vector<Edge> non_edges;
    for (std::uint32_t u = 0; u + 1 < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) non_edges.push_back(Edge{u, v});

    const std::size_t a = std::min(r, non_edges.size());
    const bool weighted = !g.edge_weights.empty();

    Graph out = g;
    out.edges.clear();
    out.edge_weights.clear();
    for (std::size_t e = 0; e < m; ++e) {
        if (drop[e]) continue;
        out.edges.push_back(g.edges[e]);
        if (weighted) out.edge_weights.push_back(g.edge_weights[e]);
    }
    if (a > 0) {
        for (std::size_t idx : sample_distinct(rng, non_edges.size(), a)) {
            out.edges.push_back(non_edges[idx]);
            if (weighted) out.edge_weights.push_back(1.0);
        }
    }
    normalize_edges(out);
    return out;
}

Graph attribute_mask(const Graph& g, double ratio, std::uint64_t seed, double mask_value) {
    check_ratio(ratio);
    const std::size_t n = g.node_count();
    const std::size_t m = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
    if (m == 0) return g;

    SplitMix64 rng(seed);
    Graph out = g;
    for (std::size_t idx : sample_distinct(rng, n, m)) {
        auto row = out.features.row(idx);
        std::fill(row.begin(), row.end(), mask_value);
    }
    return out;
}

Graph subgraph_sample(const Graph& g, double ratio, std::uint64_t seed) {
    check_ratio(ratio);
    const std::size_t n = g.node_count();
    if (n < 2) throw std::invalid_argument("subgraph_sample: need at least 2 nodes");
    const std::size_t t = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n))));
    if (t >= n)
        throw std::invalid_argument("subgraph_sample: ratio would remove the whole graph");

    SplitMix64 rng(seed);
    const auto adj = adjacency_lists(g);
    std::vector<bool> visited(n, false);

    std::size_t start = static_cast<std::size_t>(rng.uniform_below(n));
    visited[start] = true;
    std::size_t count = 1;
    std::size_t current = start;

    // Random walk; when the walk exhausts its component (or dawdles past the
    // stall limit) one unvisited frontier node is admitted directly, falling
    // back to a fresh uniform restart when no frontier exists.
    std::size_t stall = 0;
    const std::size_t stall_limit = 10 * n;
    while (count < t) {
        const auto& nbrs = adj[current];
        bool stuck = nbrs.empty();
        if (!stuck) {
            const std::uint32_t next =
                nbrs[static_cast<std::size_t>(rng.uniform_below(nbrs.size()))];
            if (!visited[next]) {
                visited[next] = true;
                ++count;
                stall = 0;
            } else {
                ++stall;
            }
            current = next;
            stuck = stall > stall_limit;
        }
        if (count < t && stuck) {
            std::vector<std::size_t> frontier, unvisited;
            for (std::size_t i = 0; i < n; ++i) {
                if (visited[i]) continue;
                unvisited.push_back(i);
                for (std::uint32_t nb : adj[i])
                    if (visited[nb]) {
                        frontier.push_back(i);
                        break;
                    }
            }
            const auto& pool = frontier.empty() ? unvisited : frontier;
            const std::size_t pick =
                pool[static_cast<std::size_t>(rng.uniform_below(pool.size()))];
            visited[pick] = true;
            ++count;
            current = pick;
            stall = 0;
        }
    }

    return induced_removal(g, visited);
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

AugmentKind parse_augment_kind(const std::string& name) {
    if (name == "identity") return AugmentKind::Identity;
    if (name == "node-drop") return AugmentKind::NodeDrop;
    if (name == "edge-perturb") return AugmentKind::EdgePerturb;
    if (name == "attr-mask") return AugmentKind::AttrMask;
    if (name == "subgraph") return AugmentKind::Subgraph;
    if (name == "synonym") return AugmentKind::SynonymReplace;
    if (name == "insert") return AugmentKind::RandomInsert;
    if (name == "delete-rewire") return AugmentKind::RandomDeleteRewire;
    if (name == "feature-swap") return AugmentKind::FeatureSwap;
    if (name == "colorize") return AugmentKind::Colorize;
    throw std::invalid_argument("unknown augmentation kind \"" + name + "\"");
}

const char* to_string(AugmentKind kind) {
    switch (kind) {
        case AugmentKind::Identity: return "identity";
        case AugmentKind::NodeDrop: return "node-drop";
        case AugmentKind::EdgePerturb: return "edge-perturb";
        case AugmentKind::AttrMask: return "attr-mask";
        case AugmentKind::Subgraph: return "subgraph";
        case AugmentKind::SynonymReplace: return "synonym";
        case AugmentKind::RandomInsert: return "insert";
        case AugmentKind::RandomDeleteRewire: return "delete-rewire";
        case AugmentKind::FeatureSwap: return "feature-swap";
        case AugmentKind::Colorize: return "colorize";
    }
    return "unknown";
}

AugmentationSpec make_augmentation_spec(const std::string& kind, double ratio,
                                        std::uint64_t seed) {
    check_ratio(ratio);
    return AugmentationSpec{parse_augment_kind(kind), ratio, seed};
}

Graph apply(const AugmentationSpec& spec, const Graph& g, const EmbeddingTable* table) {
    auto need_table = [&]() -> const EmbeddingTable& {
        if (!table)
            throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                        " requires an embedding table");
        return *table;
    };
    switch (spec.kind) {
        case AugmentKind::Identity: return g;
        case AugmentKind::NodeDrop: return node_drop(g, spec.ratio, spec.seed);
        case AugmentKind::EdgePerturb: return edge_perturb(g, spec.ratio, spec.seed);
        case AugmentKind::AttrMask: return attribute_mask(g, spec.ratio, spec.seed);
        case AugmentKind::Subgraph: return subgraph_sample(g, spec.ratio, spec.seed);
        case AugmentKind::SynonymReplace:
            return synonym_replace(g, spec.ratio, need_table(), spec.seed);
        case AugmentKind::RandomInsert:
            return random_insert(g, spec.ratio, need_table(), spec.seed);
        case AugmentKind::RandomDeleteRewire:
            return random_delete_rewire(g, spec.ratio, spec.seed);
        case AugmentKind::FeatureSwap: return feature_swap(g, spec.ratio, spec.seed);
        case AugmentKind::Colorize: return colorize(g, spec.seed);
    }
    throw std::invalid_argument("unknown augmentation kind");
}

GraphDataset apply_dataset(const AugmentationSpec& spec, const GraphDataset& ds,
                           const EmbeddingTable* table) {
    GraphDataset out;
    out.name = ds.name;
    out.class_count = ds.class_count;
    out.feature_source = ds.feature_source;
    out.graphs.resize(ds.size());
    parallel_for(ds.size(), [&](std::size_t i) {
        AugmentationSpec per_item = spec;
        per_item.seed = split_seed(spec.seed, i);
        out.graphs[i] = apply(per_item, ds.graphs[i], table);
    });
    return out;
}

}  // namespace augraph
