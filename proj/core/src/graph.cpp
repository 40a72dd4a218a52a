#include "augraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "graph_detail.hpp"

namespace augraph {

bool Graph::has_edge(std::uint32_t a, std::uint32_t b) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
}

void normalize_edges(Graph& g) {
    const bool weighted = !g.edge_weights.empty();
    std::vector<std::pair<Edge, double>> entries;
    entries.reserve(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.u == e.v) continue;  // self-loops dropped
        entries.emplace_back(make_edge(e.u, e.v), weighted ? g.edge_weights[i] : 1.0);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    g.edges.clear();
    g.edge_weights.clear();
    for (const auto& [edge, weight] : entries) {
        if (!g.edges.empty() && g.edges.back() == edge) continue;
        g.edges.push_back(edge);
        if (weighted) g.edge_weights.push_back(weight);
    }
}

std::vector<std::vector<std::uint32_t>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.node_count());
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> violations;
    const std::size_t n = g.node_count();

    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.u == e.v)
            violations.push_back("self-loop at node " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            violations.push_back("endpoint out of range in edge " + std::to_string(i));
        if (e.u > e.v)
            violations.push_back("non-canonical edge order at edge " + std::to_string(i));
        if (i > 0 && !(g.edges[i - 1] < e))
            violations.push_back("duplicate or unsorted edge at index " + std::to_string(i));
    }
    if (!g.edge_weights.empty()) {
        if (g.edge_weights.size() != g.edges.size())
            violations.push_back("edge_weights length " + std::to_string(g.edge_weights.size()) +
                                 " does not match edge count " + std::to_string(g.edges.size()));
        for (std::size_t i = 0; i < g.edge_weights.size(); ++i)
            if (!(g.edge_weights[i] > 0.0))
                violations.push_back("non-positive weight at edge " + std::to_string(i));
    }
    if (!g.node_labels.empty() && g.node_labels.size() != n)
        violations.push_back("node_labels length " + std::to_string(g.node_labels.size()) +
                             " does not match node count " + std::to_string(n));
    if (g.token_count && *g.token_count == 0)
        violations.push_back("token_count must be positive");
    return violations;
}

std::size_t degree(const Graph& g, std::size_t node) {
    if (node >= g.node_count())
        throw std::out_of_range("degree: node " + std::to_string(node) + " out of range");
    std::size_t count = 0;
    for (const Edge& e : g.edges)
        if (e.u == node || e.v == node) ++count;
    return count;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto adj = adjacency_lists(g);
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> parts;

    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> part;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (std::uint32_t u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<std::string> validate(const GraphDataset& ds) {
    std::vector<std::string> violations;
    if (ds.class_count <= 0) violations.push_back("class_count must be positive");

    std::size_t dim = ds.feature_dim();
    for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
        const Graph& g = ds.graphs[i];
        if (!g.label)
            violations.push_back("graph " + std::to_string(i) + " has no label");
        else if (*g.label < 0 || *g.label >= ds.class_count)
            violations.push_back("graph " + std::to_string(i) + " label out of range");
        if (g.feature_dim() != dim)
            violations.push_back("graph " + std::to_string(i) + " feature dimension mismatch");
        for (auto& v : validate(g))
            violations.push_back("graph " + std::to_string(i) + ": " + v);
    }
    return violations;
}

namespace detail {

Graph induced_removal(const Graph& g, const std::vector<bool>& removed) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> new_id(n, 0);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!removed[i]) new_id[i] = static_cast<std::uint32_t>(kept++);

    Graph out;
    out.label = g.label;
    out.token_count = g.token_count;
    out.features = Matrix(kept, g.feature_dim());
    if (!g.node_labels.empty()) out.node_labels.reserve(kept);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (removed[i]) continue;
        std::copy(g.features.row(i).begin(), g.features.row(i).end(),
                  out.features.row(row++).begin());
        if (!g.node_labels.empty()) out.node_labels.push_back(g.node_labels[i]);
    }
    const bool weighted = !g.edge_weights.empty();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& edge = g.edges[e];
        if (removed[edge.u] || removed[edge.v]) continue;
        out.edges.push_back(Edge{new_id[edge.u], new_id[edge.v]});
        if (weighted) out.edge_weights.push_back(g.edge_weights[e]);
    }
    return out;
}

}  // namespace detail

}  // namespace augraph
