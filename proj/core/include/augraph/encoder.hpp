#pragma once

#include <cstdint>
#include <vector>

#include "augraph/graph.hpp"
#include "augraph/matrix.hpp"

namespace augraph {

// Randomly-initialized GIN encoder, forward pass only. Parameters are fixed
// at construction and never trained; embeddings measure what the
// architecture alone encodes.

struct EncoderConfig {
    std::size_t layers = 3;
    std::size_t hidden_dim = 32;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

struct Encoder {
    struct Layer {
        Matrix w1;  // fan_in x hidden
        Matrix w2;  // hidden x hidden
        // Biases are identically zero (see init_encoder) and carried
        // implicitly.
    };
    EncoderConfig config;
    std::size_t input_dim = 0;
    std::vector<Layer> layers;

    std::size_t embedding_dim() const { return config.layers * config.hidden_dim; }
};

// Weights drawn uniform(-a, a) with a = sqrt(6 / (fan_in + fan_out)) per
// affine map; biases zero, which makes the embedding of a disjoint union
// equal the sum of the parts' embeddings. Fully determined by
// (config, input_dim).
Encoder init_encoder(const EncoderConfig& config, std::size_t input_dim);

// Node update per layer: h_v <- W2 * relu(W1 * ((1 + eps) * h_v +
// sum of neighbour h_u)). Readout concatenates the per-layer sums of node
// states, giving layers * hidden_dim entries. Edge weights are ignored.
std::vector<double> embed(const Encoder& enc, const Graph& g);

struct EmbeddingMatrix {
    Matrix rows;              // one row per graph
    std::vector<int> labels;  // class id per row
};

// Row i is embed(enc, ds.graphs[i]); labels copied. Graphs are processed in
// parallel under the process thread cap.
EmbeddingMatrix embed_dataset(const Encoder& enc, const GraphDataset& ds);

}  // namespace augraph
