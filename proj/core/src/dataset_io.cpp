#include "augraph/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace augraph {

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::runtime_error(message); }

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    // Trailing blank lines are tolerated; interior ones are not, so that line
    // numbers in diagnostics stay meaningful.
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

long long parse_int(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(context + ": expected integer, got \"" + t + "\"");
    return value;
}

double parse_double(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    try {
        std::size_t pos = 0;
        double value = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return value;
    } catch (const std::exception&) {
        fail(context + ": expected number, got \"" + t + "\"");
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::stringstream ss(line);
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (ss >> item) parts.push_back(item);
    return parts;
}

std::vector<long long> read_int_column(const std::filesystem::path& path) {
    std::vector<long long> values;
    const auto lines = read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i)
        values.push_back(parse_int(lines[i], path.filename().string() + " line " + std::to_string(i + 1)));
    return values;
}

// %.9g: enough digits that a read-back stays within 1e-8 of the original at
// the magnitudes this toolkit produces, while keeping files diffable.
std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail("cannot write " + path.string());
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// TU datasets
// ---------------------------------------------------------------------------

std::string detect_tu_name(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) fail("not a directory: " + dir.string());
    std::vector<std::string> candidates;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string file = entry.path().filename().string();
        if (file.size() > 6 && file.ends_with("_A.txt"))
            candidates.push_back(file.substr(0, file.size() - 6));
    }
    if (candidates.empty()) fail("no *_A.txt file in " + dir.string());
    if (candidates.size() > 1) {
        std::sort(candidates.begin(), candidates.end());
        fail("ambiguous dataset directory " + dir.string() + ": found " + candidates[0] +
             "_A.txt and " + candidates[1] + "_A.txt");
    }
    return candidates.front();
}

GraphDataset load_tu_dataset(const std::filesystem::path& dir) {
    return load_tu_dataset(dir, detect_tu_name(dir));
}

GraphDataset load_tu_dataset(const std::filesystem::path& dir, const std::string& name) {
    const auto file = [&](const char* suffix) { return dir / (name + suffix); };

    for (const char* required : {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt"})
        if (!std::filesystem::exists(file(required)))
            fail("missing required file " + file(required).string());

    // Node -> graph assignment (1-based graph ids in the file).
    const auto indicator = read_int_column(file("_graph_indicator.txt"));
    const std::size_t total_nodes = indicator.size();
    std::size_t graph_count = 0;
    for (long long g : indicator) {
        if (g < 1) fail("graph_indicator: graph ids must be >= 1");
        graph_count = std::max(graph_count, static_cast<std::size_t>(g));
    }

    // Raw graph labels -> contiguous 0-based ids.
    const auto raw_labels = read_int_column(file("_graph_labels.txt"));
    if (raw_labels.size() != graph_count)
        fail("graph_labels: " + std::to_string(raw_labels.size()) + " labels for " +
             std::to_string(graph_count) + " graphs");
    std::map<long long, int> label_map;
    for (long long raw : raw_labels) label_map.emplace(raw, 0);
    {
        int next = 0;
        for (auto& [raw, id] : label_map) id = next++;
    }

    // Global node id (0-based) -> (graph, local index).
    std::vector<std::size_t> node_graph(total_nodes), node_local(total_nodes);
    std::vector<std::size_t> graph_sizes(graph_count, 0);
    for (std::size_t i = 0; i < total_nodes; ++i) {
        const std::size_t g = static_cast<std::size_t>(indicator[i]) - 1;
        node_graph[i] = g;
        node_local[i] = graph_sizes[g]++;
    }
    for (std::size_t g = 0; g < graph_count; ++g)
        if (graph_sizes[g] == 0) fail("graph " + std::to_string(g + 1) + " has no nodes");

    GraphDataset ds;
    ds.name = name;
    ds.class_count = static_cast<int>(label_map.size());
    ds.graphs.resize(graph_count);
    for (std::size_t g = 0; g < graph_count; ++g)
        ds.graphs[g].label = label_map.at(raw_labels[g]);

    // Edges, with optional per-line weights.
    const auto edge_lines = read_lines(file("_A.txt"));
    std::vector<double> edge_attr;
    const bool weighted = std::filesystem::exists(file("_edge_attributes.txt"));
    if (weighted) {
        const auto lines = read_lines(file("_edge_attributes.txt"));
        if (lines.size() != edge_lines.size())
            fail("edge_attributes: " + std::to_string(lines.size()) + " rows for " +
                 std::to_string(edge_lines.size()) + " edge lines");
        edge_attr.reserve(lines.size());
        for (std::size_t i = 0; i < lines.size(); ++i)
            edge_attr.push_back(parse_double(lines[i], "edge_attributes line " + std::to_string(i + 1)));
    }
    for (std::size_t i = 0; i < edge_lines.size(); ++i) {
        const std::string context = name + "_A.txt line " + std::to_string(i + 1);
        const auto parts = split(edge_lines[i], ',');
        if (parts.size() != 2) fail(context + ": expected \"i, j\"");
        const long long a = parse_int(parts[0], context);
        const long long b = parse_int(parts[1], context);
        if (a < 1 || b < 1 || a > static_cast<long long>(total_nodes) ||
            b > static_cast<long long>(total_nodes))
            fail(context + ": node id out of range");
        const std::size_t ga = node_graph[a - 1], gb = node_graph[b - 1];
        if (ga != gb)
            fail(context + ": edge crosses graphs " + std::to_string(ga + 1) + " and " +
                 std::to_string(gb + 1));
        Graph& graph = ds.graphs[ga];
        graph.edges.push_back(Edge{static_cast<std::uint32_t>(node_local[a - 1]),
                                   static_cast<std::uint32_t>(node_local[b - 1])});
        if (weighted) graph.edge_weights.push_back(edge_attr[i]);
    }
    for (Graph& g : ds.graphs) normalize_edges(g);

    // Node labels (optional).
    const bool has_node_labels = std::filesystem::exists(file("_node_labels.txt"));
    std::vector<long long> raw_node_labels;
    if (has_node_labels) {
        raw_node_labels = read_int_column(file("_node_labels.txt"));
        if (raw_node_labels.size() != total_nodes)
            fail("node_labels: " + std::to_string(raw_node_labels.size()) + " rows for " +
                 std::to_string(total_nodes) + " nodes");
        for (std::size_t g = 0; g < graph_count; ++g)
            ds.graphs[g].node_labels.resize(graph_sizes[g]);
        for (std::size_t i = 0; i < total_nodes; ++i)
            ds.graphs[node_graph[i]].node_labels[node_local[i]] =
                static_cast<int>(raw_node_labels[i]);
    }

    // Features: attributes, else one-hot node labels, else constant 1.
    if (std::filesystem::exists(file("_node_attributes.txt"))) {
        ds.feature_source = FeatureSource::Attributes;
        const auto lines = read_lines(file("_node_attributes.txt"));
        if (lines.size() != total_nodes)
            fail("node_attributes: " + std::to_string(lines.size()) + " rows for " +
                 std::to_string(total_nodes) + " nodes");
        std::size_t dim = 0;
        std::vector<std::vector<double>> rows(total_nodes);
        for (std::size_t i = 0; i < total_nodes; ++i) {
            const std::string context = "node_attributes line " + std::to_string(i + 1);
            for (const auto& part : split(lines[i], ','))
                rows[i].push_back(parse_double(part, context));
            if (i == 0)
                dim = rows[i].size();
            else if (rows[i].size() != dim)
                fail(context + ": inconsistent attribute dimension");
        }
        for (std::size_t g = 0; g < graph_count; ++g)
            ds.graphs[g].features = Matrix(graph_sizes[g], dim);
        for (std::size_t i = 0; i < total_nodes; ++i) {
            auto row = ds.graphs[node_graph[i]].features.row(node_local[i]);
            std::copy(rows[i].begin(), rows[i].end(), row.begin());
        }
    } else if (has_node_labels) {
        ds.feature_source = FeatureSource::OneHotNodeLabels;
        // Global alphabet so every graph shares one feature dimension.
        std::map<long long, std::size_t> alphabet;
        for (long long v : raw_node_labels) alphabet.emplace(v, 0);
        {
            std::size_t next = 0;
            for (auto& [v, slot] : alphabet) slot = next++;
        }
        for (std::size_t g = 0; g < graph_count; ++g)
            ds.graphs[g].features = Matrix(graph_sizes[g], alphabet.size());
        for (std::size_t i = 0; i < total_nodes; ++i)
            ds.graphs[node_graph[i]].features.at(node_local[i],
                                                 alphabet.at(raw_node_labels[i])) = 1.0;
    } else {
        ds.feature_source = FeatureSource::ConstantOne;
        for (std::size_t g = 0; g < graph_count; ++g)
            ds.graphs[g].features = Matrix(graph_sizes[g], 1, 1.0);
    }

    // Token counts (optional extension used by text pipelines).
    if (std::filesystem::exists(file("_graph_attributes.txt"))) {
        const auto counts = read_int_column(file("_graph_attributes.txt"));
        if (counts.size() != graph_count)
            fail("graph_attributes: " + std::to_string(counts.size()) + " rows for " +
                 std::to_string(graph_count) + " graphs");
        for (std::size_t g = 0; g < graph_count; ++g) {
            if (counts[g] < 1) fail("graph_attributes: token count must be positive");
            ds.graphs[g].token_count = static_cast<std::size_t>(counts[g]);
        }
    }

    return ds;
}

void write_tu_dataset(const GraphDataset& ds, const std::filesystem::path& dir) {
    write_tu_dataset(ds, dir, ds.name);
}

void write_tu_dataset(const GraphDataset& ds, const std::filesystem::path& dir,
                      const std::string& name) {
    if (name.empty()) fail("write_tu_dataset: empty dataset name");
    std::filesystem::create_directories(dir);
    const auto file = [&](const char* suffix) { return dir / (name + suffix); };

    std::vector<std::size_t> offsets(ds.size() + 1, 0);
    for (std::size_t g = 0; g < ds.size(); ++g)
        offsets[g + 1] = offsets[g] + ds.graphs[g].node_count();

    const bool weighted =
        std::any_of(ds.graphs.begin(), ds.graphs.end(),
                    [](const Graph& g) { return !g.edge_weights.empty(); });
    const bool has_node_labels =
        std::any_of(ds.graphs.begin(), ds.graphs.end(),
                    [](const Graph& g) { return !g.node_labels.empty(); });
    const bool has_token_counts =
        !ds.graphs.empty() &&
        std::all_of(ds.graphs.begin(), ds.graphs.end(),
                    [](const Graph& g) { return g.token_count.has_value(); });

    {
        auto a = open_out(file("_A.txt"));
        std::ofstream w;
        if (weighted) w = open_out(file("_edge_attributes.txt"));
        for (std::size_t g = 0; g < ds.size(); ++g) {
            const Graph& graph = ds.graphs[g];
            for (std::size_t e = 0; e < graph.edges.size(); ++e) {
                const std::size_t u = offsets[g] + graph.edges[e].u + 1;
                const std::size_t v = offsets[g] + graph.edges[e].v + 1;
                a << u << ", " << v << "\n" << v << ", " << u << "\n";
                if (weighted) {
                    const double weight =
                        graph.edge_weights.empty() ? 1.0 : graph.edge_weights[e];
                    w << format_g9(weight) << "\n" << format_g9(weight) << "\n";
                }
            }
        }
    }
    {
        auto out = open_out(file("_graph_indicator.txt"));
        for (std::size_t g = 0; g < ds.size(); ++g)
            for (std::size_t i = 0; i < ds.graphs[g].node_count(); ++i) out << (g + 1) << "\n";
    }
    {
        auto out = open_out(file("_graph_labels.txt"));
        for (const Graph& g : ds.graphs) out << g.label.value_or(0) << "\n";
    }
    if (has_node_labels) {
        auto out = open_out(file("_node_labels.txt"));
        for (const Graph& g : ds.graphs) {
            if (g.node_labels.size() != g.node_count())
                fail("write_tu_dataset: node labels present on some graphs but not all nodes");
            for (int v : g.node_labels) out << v << "\n";
        }
    }
    if (ds.feature_source == FeatureSource::Attributes) {
        auto out = open_out(file("_node_attributes.txt"));
        for (const Graph& g : ds.graphs) {
            for (std::size_t i = 0; i < g.node_count(); ++i) {
                const auto row = g.features.row(i);
                for (std::size_t c = 0; c < row.size(); ++c)
                    out << (c ? ", " : "") << format_g9(row[c]);
                out << "\n";
            }
        }
    }
    if (has_token_counts) {
        auto out = open_out(file("_graph_attributes.txt"));
        for (const Graph& g : ds.graphs) out << *g.token_count << "\n";
    }
}

// ---------------------------------------------------------------------------
// Embedding tables and corpora
// ---------------------------------------------------------------------------

std::vector<double> EmbeddingTable::lookup(const std::string& token) const {
    auto it = index.find(token);
    if (it == index.end()) return std::vector<double>(dim(), 0.0);
    const auto row = vectors.row(it->second);
    return {row.begin(), row.end()};
}

EmbeddingTable load_embedding_table(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) fail("embedding table " + path.string() + " is empty");

    std::size_t first = 0;
    {
        // Optional "count dim" header: exactly two integer tokens.
        const auto parts = split_whitespace(lines[0]);
        auto is_int = [](const std::string& s) {
            long long v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            return ec == std::errc{} && ptr == s.data() + s.size();
        };
        if (parts.size() == 2 && is_int(parts[0]) && is_int(parts[1])) first = 1;
    }
    if (first == lines.size()) fail("embedding table " + path.string() + " has no rows");

    EmbeddingTable table;
    std::vector<std::vector<double>> rows;
    std::size_t dim = 0;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const std::string context = path.filename().string() + " line " + std::to_string(i + 1);
        const auto parts = split_whitespace(lines[i]);
        if (parts.size() < 2) fail(context + ": expected word followed by numbers");
        const std::string& word = parts[0];
        if (!table.index.emplace(word, table.words.size()).second)
            fail(context + ": duplicate word \"" + word + "\"");
        table.words.push_back(word);
        std::vector<double> row;
        for (std::size_t p = 1; p < parts.size(); ++p)
            row.push_back(parse_double(parts[p], context));
        if (rows.empty())
            dim = row.size();
        else if (row.size() != dim)
            fail(context + ": inconsistent dimension (" + std::to_string(row.size()) +
                 " vs " + std::to_string(dim) + ")");
        rows.push_back(std::move(row));
    }
    table.vectors = Matrix(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        std::copy(rows[r].begin(), rows[r].end(), table.vectors.row(r).begin());
    return table;
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::vector<Document> docs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string context = path.filename().string() + " line " + std::to_string(i + 1);
        const auto tab = lines[i].find('\t');
        if (tab == std::string::npos) fail(context + ": expected <label>\\t<tokens>");
        Document doc;
        doc.label = static_cast<int>(parse_int(lines[i].substr(0, tab), context));
        for (auto& token : split_whitespace(lines[i].substr(tab + 1))) {
            for (char& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            doc.tokens.push_back(std::move(token));
        }
        if (doc.tokens.empty()) fail(context + ": document has no tokens");
        docs.push_back(std::move(doc));
    }
    return docs;
}

// ---------------------------------------------------------------------------
// Matrices, labels, images
// ---------------------------------------------------------------------------

void write_matrix_csv(const Matrix& m, const std::filesystem::path& path) {
    auto out = open_out(path);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_g9(row[c]);
        out << "\n";
    }
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::vector<std::vector<double>> rows;
    std::size_t dim = 0;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        std::vector<double> row;
        const auto parts = split(lines[r], ',');
        for (std::size_t c = 0; c < parts.size(); ++c)
            row.push_back(parse_double(parts[c], path.filename().string() + " row " +
                                                     std::to_string(r + 1) + " column " +
                                                     std::to_string(c + 1)));
        if (rows.empty())
            dim = row.size();
        else if (row.size() != dim)
            fail(path.filename().string() + " row " + std::to_string(r + 1) +
                 ": ragged row (" + std::to_string(row.size()) + " vs " + std::to_string(dim) +
                 " columns)");
        rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    return m;
}

void write_labels(const std::vector<int>& labels, const std::filesystem::path& path) {
    auto out = open_out(path);
    for (int v : labels) out << v << "\n";
}

std::vector<int> read_labels(const std::filesystem::path& path) {
    std::vector<int> labels;
    for (long long v : read_int_column(path)) labels.push_back(static_cast<int>(v));
    return labels;
}

void write_heatmap_pgm(const Matrix& m, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "P2\n" << m.cols() << " " << m.rows() << "\n255\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            const double v = std::clamp(row[c], -1.0, 1.0);
            const int pixel = static_cast<int>(std::floor((v + 1.0) / 2.0 * 255.0 + 0.5));
            out << (c ? " " : "") << std::clamp(pixel, 0, 255);
        }
        out << "\n";
    }
}

}  // namespace augraph
