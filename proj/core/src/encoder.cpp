#include "augraph/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "augraph/parallel.hpp"
#include "augraph/rng.hpp"

namespace augraph {

namespace {

// Glorot-uniform fill; draw order is row-major, one matrix at a time, so the
// parameter set is a pure function of (config, input_dim).
Matrix glorot(SplitMix64& rng, std::size_t fan_in, std::size_t fan_out) {
    const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Matrix w(fan_in, fan_out);
    for (double& v : w.data()) v = (rng.uniform_real() * 2.0 - 1.0) * a;
    return w;
}

}  // namespace

Encoder init_encoder(const EncoderConfig& config, std::size_t input_dim) {
    if (config.layers < 1 || config.hidden_dim < 1)
        throw std::invalid_argument("init_encoder: layers and hidden_dim must be >= 1");
    if (input_dim < 1) throw std::invalid_argument("init_encoder: input_dim must be >= 1");

    Encoder enc;
    enc.config = config;
    enc.input_dim = input_dim;
    SplitMix64 rng(config.seed);
    for (std::size_t l = 0; l < config.layers; ++l) {
        const std::size_t fan_in = l == 0 ? input_dim : config.hidden_dim;
        Encoder::Layer layer;
        layer.w1 = glorot(rng, fan_in, config.hidden_dim);
        layer.w2 = glorot(rng, config.hidden_dim, config.hidden_dim);
        enc.layers.push_back(std::move(layer));
    }
    return enc;
}

std::vector<double> embed(const Encoder& enc, const Graph& g) {
    if (g.feature_dim() != enc.input_dim)
        throw std::invalid_argument("embed: graph feature dimension " +
                                    std::to_string(g.feature_dim()) +
                                    " does not match encoder input dimension " +
                                    std::to_string(enc.input_dim));

    const std::size_t n = g.node_count();
    const std::size_t hidden = enc.config.hidden_dim;
    const double eps = enc.config.epsilon;
    const auto adj = adjacency_lists(g);

    std::vector<double> out;
    out.reserve(enc.embedding_dim());

    Matrix h = g.features;
    for (const Encoder::Layer& layer : enc.layers) {
        const std::size_t fan_in = layer.w1.rows();

        // Sum aggregation: (1 + eps) * h_v + sum of neighbour states.
        Matrix agg(n, fan_in);
        for (std::size_t v = 0; v < n; ++v) {
            auto dst = agg.row(v);
            const auto own = h.row(v);
            for (std::size_t c = 0; c < fan_in; ++c) dst[c] = (1.0 + eps) * own[c];
            for (std::uint32_t u : adj[v]) {
                const auto nb = h.row(u);
                for (std::size_t c = 0; c < fan_in; ++c) dst[c] += nb[c];
            }
        }

        // Per-layer MLP, biases identically zero: w2 * relu(w1 * agg).
        Matrix next(n, hidden);
        std::vector<double> mid(hidden);
        for (std::size_t v = 0; v < n; ++v) {
            const auto in = agg.row(v);
            for (std::size_t c = 0; c < hidden; ++c) {
                double s = 0.0;
                for (std::size_t r = 0; r < fan_in; ++r) s += in[r] * layer.w1.at(r, c);
                mid[c] = s > 0.0 ? s : 0.0;
            }
            auto dst = next.row(v);
            for (std::size_t c = 0; c < hidden; ++c) {
                double s = 0.0;
                for (std::size_t r = 0; r < hidden; ++r) s += mid[r] * layer.w2.at(r, c);
                dst[c] = s;
            }
        }
        h = std::move(next);

        // Readout: per-layer sum pooling, concatenated across layers.
        for (std::size_t c = 0; c < hidden; ++c) {
            double s = 0.0;
            for (std::size_t v = 0; v < n; ++v) s += h.at(v, c);
            out.push_back(s);
        }
    }
    return out;
}

EmbeddingMatrix embed_dataset(const Encoder& enc, const GraphDataset& ds) {
    EmbeddingMatrix emb;
    emb.rows = Matrix(ds.size(), enc.embedding_dim());
    emb.labels.resize(ds.size());
    parallel_for(ds.size(), [&](std::size_t i) {
        const auto row = embed(enc, ds.graphs[i]);
        std::copy(row.begin(), row.end(), emb.rows.row(i).begin());
        emb.labels[i] = ds.graphs[i].label.value_or(0);
    });
    return emb;
}

}  // namespace augraph
