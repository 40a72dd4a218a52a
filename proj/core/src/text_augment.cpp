#include "augraph/text_augment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "augraph/numeric.hpp"
#include "augraph/parallel.hpp"
#include "augraph/rng.hpp"
#include "graph_detail.hpp"

namespace augraph {

using detail::induced_removal;

namespace {

void check_ratio(double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw std::invalid_argument("augmentation ratio must lie in [0, 1]");
}

// Edit counts scale with the original sentence length, not the node count:
// repeated words collapse into one node but still lengthen the sentence.
std::size_t edit_count(const Graph& g, double ratio) {
    const std::size_t t = g.token_count.value_or(g.node_count());
    return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(t)));
}

void check_table(const EmbeddingTable& table, const Graph& g, const char* op) {
    if (table.size() == 0)
        throw std::invalid_argument(std::string(op) + ": embedding table is empty");
    if (g.feature_dim() != table.dim())
        throw std::invalid_argument(std::string(op) + ": graph feature dimension " +
                                    std::to_string(g.feature_dim()) +
                                    " does not match table dimension " +
                                    std::to_string(table.dim()));
}

}  // namespace

Graph build_cooccurrence(const Document& doc, std::size_t window,
                         const EmbeddingTable& table) {
    if (window < 2) throw std::invalid_argument("build_cooccurrence: window must be >= 2");
    if (doc.tokens.empty()) throw std::invalid_argument("build_cooccurrence: empty document");

    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<const std::string*> order;
    for (const auto& token : doc.tokens) {
        if (ids.emplace(token, static_cast<std::uint32_t>(order.size())).second)
            order.push_back(&token);
    }

    Graph g;
    g.label = doc.label;
    g.token_count = doc.tokens.size();
    g.features = Matrix(order.size(), table.dim());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto vec = table.lookup(*order[i]);
        std::copy(vec.begin(), vec.end(), g.features.row(i).begin());
    }

    // Two occurrences co-occur when they fit in one window of `window`
    // consecutive positions, i.e. their distance is at most window - 1. Each
    // such occurrence pair adds 1 to the edge weight.
    std::map<Edge, double> weights;
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
        for (std::size_t j = i + 1; j < doc.tokens.size() && j - i <= window - 1; ++j) {
            const std::uint32_t a = ids.at(doc.tokens[i]);
            const std::uint32_t b = ids.at(doc.tokens[j]);
            if (a == b) continue;
            weights[make_edge(a, b)] += 1.0;
        }
    }
    for (const auto& [edge, weight] : weights) {
        g.edges.push_back(edge);
        g.edge_weights.push_back(weight);
    }
    return g;
}

Graph synonym_replace(const Graph& g, double ratio, const EmbeddingTable& table,
                      std::uint64_t seed) {
    check_ratio(ratio);
    check_table(table, g, "synonym_replace");
    const std::size_t n = g.node_count();
    const std::size_t m = std::min(n, edit_count(g, ratio));
    if (m == 0) return g;

    SplitMix64 rng(seed);
    Graph out = g;
    for (std::size_t idx : sample_distinct(rng, n, m)) {
        auto row = out.features.row(idx);
        if (norm(row) == 0.0) continue;  // OOV zero vector: cosine undefined

        std::size_t best = table.size();
        double best_sim = -2.0;
        for (std::size_t w = 0; w < table.size(); ++w) {
            const auto cand = table.vectors.row(w);
            if (std::equal(cand.begin(), cand.end(), row.begin(), row.end())) continue;
            const double sim = cosine_similarity(row, cand);
            if (sim > best_sim) {
                best_sim = sim;
                best = w;
            }
        }
        if (best == table.size()) continue;  // every table row equals the feature
        const auto chosen = table.vectors.row(best);
        std::copy(chosen.begin(), chosen.end(), row.begin());
    }
    return out;
}

Graph random_insert(const Graph& g, double ratio, const EmbeddingTable& table,
                    std::uint64_t seed) {
    check_ratio(ratio);
    check_table(table, g, "random_insert");
    if (g.node_count() == 0) throw std::invalid_argument("random_insert: empty graph");
    const std::size_t m = edit_count(g, ratio);
    if (m == 0) return g;

    SplitMix64 rng(seed);
    Graph out = g;
    const bool weighted = !g.edge_weights.empty();
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t n = out.node_count();
        const std::uint32_t u = static_cast<std::uint32_t>(rng.uniform_below(n));
        const std::size_t w = static_cast<std::size_t>(rng.uniform_below(table.size()));

        // Collect u's current incident edges before growing the graph.
        std::vector<std::pair<std::uint32_t, double>> neighbours;
        for (std::size_t e = 0; e < out.edges.size(); ++e) {
            const Edge& edge = out.edges[e];
            if (edge.u != u && edge.v != u) continue;
            const std::uint32_t other = edge.u == u ? edge.v : edge.u;
            neighbours.emplace_back(other, weighted ? out.edge_weights[e] : 1.0);
        }

        Matrix grown(n + 1, out.feature_dim());
        std::copy(out.features.data().begin(), out.features.data().end(),
                  grown.data().begin());
        const auto vec = table.vectors.row(w);
        std::copy(vec.begin(), vec.end(), grown.row(n).begin());
        out.features = std::move(grown);
        if (!out.node_labels.empty()) out.node_labels.push_back(out.node_labels[u]);

        const std::uint32_t v = static_cast<std::uint32_t>(n);
        for (const auto& [other, weight] : neighbours) {
            out.edges.push_back(make_edge(v, other));
            if (weighted) out.edge_weights.push_back(weight);
        }
        normalize_edges(out);
    }
    return out;
}

Graph random_delete_rewire(const Graph& g, double ratio, std::uint64_t seed) {
    check_ratio(ratio);
    const std::size_t n0 = g.node_count();
    const std::size_t m = n0 == 0 ? 0 : std::min(n0 - 1, edit_count(g, ratio));
    if (m == 0) return g;

    SplitMix64 rng(seed);
    Graph out = g;
    const bool weighted = !g.edge_weights.empty();
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t n = out.node_count();
        const std::uint32_t victim = static_cast<std::uint32_t>(rng.uniform_below(n));

        std::vector<std::uint32_t> neighbours;
        for (const Edge& edge : out.edges) {
            if (edge.u == victim) neighbours.push_back(edge.v);
            else if (edge.v == victim) neighbours.push_back(edge.u);
        }

        std::vector<bool> removed(n, false);
        removed[victim] = true;
        Graph next = induced_removal(out, removed);

        // Former neighbours, under the compacted ids, become a clique: every
        // co-occurrence path of length 2 through the deleted word survives.
        for (std::uint32_t& nb : neighbours)
            if (nb > victim) --nb;
        std::sort(neighbours.begin(), neighbours.end());
        std::vector<Edge> additions;
        for (std::size_t i = 0; i < neighbours.size(); ++i)
            for (std::size_t j = i + 1; j < neighbours.size(); ++j)
                if (!next.has_edge(neighbours[i], neighbours[j]))
                    additions.push_back(make_edge(neighbours[i], neighbours[j]));
        if (!additions.empty()) {
            for (const Edge& e : additions) {
                next.edges.push_back(e);
                if (weighted) next.edge_weights.push_back(1.0);
            }
            normalize_edges(next);
        }
        out = std::move(next);
    }
    return out;
}

Graph feature_swap(const Graph& g, double ratio, std::uint64_t seed) {
    check_ratio(ratio);
    const std::size_t n = g.node_count();
    if (n < 2) return g;
    const std::size_t m = edit_count(g, ratio);
    if (m == 0) return g;

    SplitMix64 rng(seed);
    Graph out = g;
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t i = static_cast<std::size_t>(rng.uniform_below(n));
        std::size_t j = static_cast<std::size_t>(rng.uniform_below(n - 1));
        if (j >= i) ++j;
        auto ri = out.features.row(i);
        auto rj = out.features.row(j);
        std::swap_ranges(ri.begin(), ri.end(), rj.begin());
        if (!out.node_labels.empty()) std::swap(out.node_labels[i], out.node_labels[j]);
    }
    return out;
}

ContextAugConfig parse_context_config(const std::string& text) {
    ContextAugConfig config;
    if (text.empty()) return config;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("context config: expected key=value, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        double value = 0.0;
        try {
            std::size_t pos = 0;
            value = std::stod(item.substr(eq + 1), &pos);
            if (pos != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("context config: bad ratio in \"" + item + "\"");
        }
        if (!(value >= 0.0 && value <= 1.0))
            throw std::invalid_argument("context config: ratio for " + key +
                                        " must lie in [0, 1]");
        if (key == "synonym") config.synonym_ratio = value;
        else if (key == "delete") config.delete_ratio = value;
        else if (key == "insert") config.insert_ratio = value;
        else if (key == "swap") config.swap_ratio = value;
        else throw std::invalid_argument("context config: unknown key \"" + key + "\"");
    }
    return config;
}

Graph apply_context(const ContextAugConfig& config, const Graph& g,
                    const EmbeddingTable& table) {
    Graph out = synonym_replace(g, config.synonym_ratio, table, split_seed(config.seed, 0));
    out = random_insert(out, config.insert_ratio, table, split_seed(config.seed, 1));
    out = feature_swap(out, config.swap_ratio, split_seed(config.seed, 2));
    out = random_delete_rewire(out, config.delete_ratio, split_seed(config.seed, 3));
    return out;
}

Graph colorize_with(const Graph& g, double r, double green, double b) {
    if (g.feature_dim() != 3)
        throw std::invalid_argument(
            "colorize: expected [intensity, x, y] features (dimension 3), got dimension " +
            std::to_string(g.feature_dim()));

    Graph out = g;
    out.features = Matrix(g.node_count(), 5);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto in = g.features.row(i);
        auto row = out.features.row(i);
        row[0] = in[0] * r;
        row[1] = in[0] * green;
        row[2] = in[0] * b;
        row[3] = in[1];
        row[4] = in[2];
    }
    return out;
}

Graph colorize(const Graph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const double r = rng.uniform_real();
    const double green = rng.uniform_real();
    const double b = rng.uniform_real();
    return colorize_with(g, r, green, b);
}

GraphDataset colorize(const GraphDataset& ds, std::uint64_t seed) {
    GraphDataset out;
    out.name = ds.name;
    out.class_count = ds.class_count;
    out.feature_source = FeatureSource::Attributes;
    out.graphs.resize(ds.size());
    parallel_for(ds.size(), [&](std::size_t i) {
        out.graphs[i] = colorize(ds.graphs[i], split_seed(seed, i));
    });
    return out;
}

}  // namespace augraph
