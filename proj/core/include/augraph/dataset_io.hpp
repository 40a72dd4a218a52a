#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "augraph/graph.hpp"
#include "augraph/matrix.hpp"

namespace augraph {

// ---------------------------------------------------------------------------
// TU-style graph datasets
//
// A dataset named NAME living in directory DIR consists of:
//   DIR/NAME_A.txt                edge list, 1-based global node ids, one
//                                 "i, j" pair per line, both directions listed
//   DIR/NAME_graph_indicator.txt  node -> graph id (1-based), one per line
//   DIR/NAME_graph_labels.txt     one integer label per graph
//   DIR/NAME_node_labels.txt      optional, one integer per node
//   DIR/NAME_node_attributes.txt  optional, comma-separated floats per node
//   DIR/NAME_edge_attributes.txt  optional, one weight per A.txt line
//   DIR/NAME_graph_attributes.txt optional, one token count per graph
// ---------------------------------------------------------------------------

// Picks the dataset name from a directory by locating the unique *_A.txt
// file. Throws std::runtime_error if there is no candidate or more than one.
std::string detect_tu_name(const std::filesystem::path& dir);

// Loads a TU dataset. Graph labels are remapped to contiguous 0-based ids in
// sorted order of the distinct raw values; node label values are remapped the
// same way when used for one-hot features. Feature source preference:
// node_attributes, then one-hot node labels, then a constant 1.0 column.
GraphDataset load_tu_dataset(const std::filesystem::path& dir, const std::string& name);
GraphDataset load_tu_dataset(const std::filesystem::path& dir);

// Writes a dataset in the same layout (both edge directions). Emits
// node_attributes only when the features came from attributes, node_labels
// only when present, edge_attributes only for weighted graphs, and
// graph_attributes only when every graph carries a token count. The one-name
// overload uses ds.name.
void write_tu_dataset(const GraphDataset& ds, const std::filesystem::path& dir,
                      const std::string& name);
void write_tu_dataset(const GraphDataset& ds, const std::filesystem::path& dir);

// ---------------------------------------------------------------------------
// Token embedding tables and corpora
// ---------------------------------------------------------------------------

struct EmbeddingTable {
    std::vector<std::string> words;  // file order
    Matrix vectors;                  // one row per word
    std::unordered_map<std::string, std::size_t> index;

    std::size_t size() const { return words.size(); }
    std::size_t dim() const { return vectors.cols(); }

    // Zero vector for out-of-vocabulary tokens.
    std::vector<double> lookup(const std::string& token) const;
};

// Text format: one word per line followed by whitespace-separated floats. An
// optional first line "count dim" (exactly two integer tokens) is skipped.
// All rows must share a dimension; duplicate words are an error.
EmbeddingTable load_embedding_table(const std::filesystem::path& path);

struct Document {
    std::vector<std::string> tokens;
    int label = 0;
};

// One document per line: "<label><TAB><token token ...>". Tokens are
// lowercased; an empty token list is a malformed-line error (reported with
// its line number).
std::vector<Document> load_corpus(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Matrices, labels, images
// ---------------------------------------------------------------------------

// CSV with no header, %.9g formatting, '\n' line endings.
void write_matrix_csv(const Matrix& m, const std::filesystem::path& path);
Matrix read_matrix_csv(const std::filesystem::path& path);

void write_labels(const std::vector<int>& labels, const std::filesystem::path& path);
std::vector<int> read_labels(const std::filesystem::path& path);

// Plain-text PGM (P2), maxval 255. Entries are clamped to [-1, 1] and mapped
// by round-half-up of (v + 1) / 2 * 255.
void write_heatmap_pgm(const Matrix& m, const std::filesystem::path& path);

}  // namespace augraph
