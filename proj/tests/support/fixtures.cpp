#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace augraph::testsup {

Graph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                 std::size_t dim) {
    Graph g;
    g.features = Matrix(n, dim, 1.0);
    for (auto [a, b] : edges) g.edges.push_back(make_edge(a, b));
    normalize_edges(g);
    return g;
}

Graph path_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
    auto e = std::vector<std::pair<std::uint32_t, std::uint32_t>>{};
    for (std::uint32_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    if (n > 2) e.push_back({0, static_cast<std::uint32_t>(n - 1)});
    return from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 1; i <= leaves; ++i) e.push_back({0, i});
    return from_edges(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.feature_dim() != b.feature_dim())
        throw std::invalid_argument("disjoint_union: feature dim mismatch");
    Graph out;
    const std::size_t na = a.node_count();
    out.features = Matrix(na + b.node_count(), a.feature_dim());
    for (std::size_t i = 0; i < na; ++i)
        std::copy(a.features.row(i).begin(), a.features.row(i).end(), out.features.row(i).begin());
    for (std::size_t i = 0; i < b.node_count(); ++i)
        std::copy(b.features.row(i).begin(), b.features.row(i).end(),
                  out.features.row(na + i).begin());
    out.edges = a.edges;
    for (const auto& e : b.edges)
        out.edges.push_back({static_cast<std::uint32_t>(e.u + na),
                             static_cast<std::uint32_t>(e.v + na)});
    if (!a.edge_weights.empty() || !b.edge_weights.empty()) {
        out.edge_weights.assign(a.edges.size(), 1.0);
        if (!a.edge_weights.empty()) out.edge_weights = a.edge_weights;
        if (!b.edge_weights.empty())
            out.edge_weights.insert(out.edge_weights.end(), b.edge_weights.begin(),
                                    b.edge_weights.end());
        else
            out.edge_weights.resize(out.edges.size(), 1.0);
    }
    normalize_edges(out);
    return out;
}

Graph random_graph(SplitMix64& rng, std::size_t n_min, std::size_t n_max, std::size_t dim) {
    const std::size_t n = n_min + rng.uniform_below(n_max - n_min + 1);
    Graph g;
    g.features = Matrix(n, dim);
    for (auto& v : g.features.data()) v = rng.uniform_real();
    const double density = rng.uniform_real();
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.uniform_real() < density) g.edges.push_back({i, j});
    normalize_edges(g);
    if (rng.uniform_below(2) == 0) {
        g.edge_weights.resize(g.edges.size());
        for (auto& w : g.edge_weights) w = 0.5 + rng.uniform_real();
    }
    if (rng.uniform_below(2) == 0) {
        g.node_labels.resize(n);
        for (auto& l : g.node_labels) l = static_cast<int>(rng.uniform_below(7));
    }
    if (rng.uniform_below(2) == 0) g.token_count = n + rng.uniform_below(2 * n);
    g.label = static_cast<int>(rng.uniform_below(3));
    return g;
}

EmbeddingTable make_table(std::vector<std::string> words, Matrix vectors) {
    EmbeddingTable t;
    t.words = std::move(words);
    t.vectors = std::move(vectors);
    for (std::size_t i = 0; i < t.words.size(); ++i) t.index.emplace(t.words[i], i);
    return t;
}

void one_hot_from_node_labels(GraphDataset& ds) {
    std::map<int, std::size_t> alphabet;
    for (const auto& g : ds.graphs)
        for (int l : g.node_labels) alphabet.emplace(l, 0);
    std::size_t next = 0;
    for (auto& [l, slot] : alphabet) slot = next++;
    for (auto& g : ds.graphs) {
        Matrix f(g.node_count(), alphabet.size());
        for (std::size_t i = 0; i < g.node_count(); ++i)
            f.at(i, alphabet.at(g.node_labels[i])) = 1.0;
        g.features = std::move(f);
    }
    ds.feature_source = FeatureSource::OneHotNodeLabels;
}

namespace {

Graph fixture_ring(SplitMix64& rng) {
    const std::size_t n = 10 + rng.uniform_below(19);  // 10..28
    Graph g = cycle_graph(n);
    g.node_labels.resize(n);
    for (auto& l : g.node_labels) l = static_cast<int>(rng.uniform_below(7));
    g.label = 1;
    return g;
}

Graph fixture_tree(SplitMix64& rng) {
    const std::size_t n = 10 + rng.uniform_below(19);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t v = 1; v < n; ++v)
        e.push_back({static_cast<std::uint32_t>(rng.uniform_below(v)), v});
    Graph g = from_edges(n, e);
    g.node_labels.resize(n);
    for (auto& l : g.node_labels) l = static_cast<int>(rng.uniform_below(7));
    g.label = 0;
    return g;
}

}  // namespace

GraphDataset two_class_topology_fixture() {
    GraphDataset ds;
    ds.name = "TOPO188";
    ds.class_count = 2;
    SplitMix64 rng(0x7460F188u);
    std::vector<int> classes(188, 1);
    std::fill_n(classes.begin(), 63, 0);
    shuffle(rng, classes);
    for (int c : classes)
        ds.graphs.push_back(c == 1 ? fixture_ring(rng) : fixture_tree(rng));
    one_hot_from_node_labels(ds);
    return ds;
}

GraphDataset acceptance_dataset(std::string* source_note) {
    if (const char* dir = std::getenv("AUGRAPH_MUTAG_DIR")) {
        if (source_note) *source_note = std::string("TU dataset at ") + dir;
        return load_tu_dataset(dir);
    }
    if (source_note) *source_note = "built-in two-class topology fixture (188 graphs)";
    return two_class_topology_fixture();
}

}  // namespace augraph::testsup
