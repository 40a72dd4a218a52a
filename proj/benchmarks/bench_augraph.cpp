#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "augraph/augment.hpp"
#include "augraph/encoder.hpp"
#include "augraph/eval.hpp"
#include "augraph/fidelity.hpp"
#include "augraph/graph.hpp"
#include "augraph/matrix.hpp"
#include "augraph/rng.hpp"

using namespace augraph;

namespace {

Graph random_graph(std::uint64_t seed, std::size_t n, std::size_t dim) {
    SplitMix64 rng(seed);
    Graph g;
    g.features = Matrix(n, dim);
    for (double& v : g.features.data()) v = rng.uniform_real();
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.uniform_real() < 0.15) g.edges.push_back(make_edge(u, v));
    normalize_edges(g);
    return g;
}

Matrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols) {
    SplitMix64 rng(seed);
    Matrix m(rows, cols);
    for (double& v : m.data()) v = rng.uniform_real() * 2.0 - 1.0;
    return m;
}

void BM_NodeDrop(benchmark::State& state) {
    const Graph g = random_graph(1, static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(node_drop(g, 0.2, 7));
}

void BM_EdgePerturb(benchmark::State& state) {
    const Graph g = random_graph(2, static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(edge_perturb(g, 0.2, 7));
}

void BM_SubgraphSample(benchmark::State& state) {
    const Graph g = random_graph(3, static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(subgraph_sample(g, 0.2, 7));
}

void BM_LaplacianSpectrum(benchmark::State& state) {
    const Graph g = random_graph(4, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(laplacian_spectrum(g));
}

void BM_Embed(benchmark::State& state) {
    const Graph g = random_graph(5, static_cast<std::size_t>(state.range(0)), 8);
    const Encoder enc = init_encoder({.layers = 3, .hidden_dim = 32, .epsilon = 0, .seed = 1}, 8);
    for (auto _ : state) benchmark::DoNotOptimize(embed(enc, g));
}

void BM_NtXent(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(6, n, 96);
    const Matrix b = random_matrix(7, n, 96);
    for (auto _ : state) benchmark::DoNotOptimize(nt_xent(a, b, 0.5));
}

void BM_TrainProbe(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    EmbeddingMatrix emb;
    emb.rows = random_matrix(8, n, 96);
    SplitMix64 rng(9);
    emb.labels.resize(n);
    for (int& l : emb.labels) l = static_cast<int>(rng.uniform_below(2));
    ProbeConfig config;
    config.epochs = 100;
    for (auto _ : state) benchmark::DoNotOptimize(train_linear_probe(emb, config));
}

}  // namespace

BENCHMARK(BM_NodeDrop)->Arg(64)->Arg(256);
BENCHMARK(BM_EdgePerturb)->Arg(64)->Arg(256);
BENCHMARK(BM_SubgraphSample)->Arg(64)->Arg(256);
BENCHMARK(BM_LaplacianSpectrum)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_Embed)->Arg(16)->Arg(64);
BENCHMARK(BM_NtXent)->Arg(32)->Arg(128);
BENCHMARK(BM_TrainProbe)->Arg(64);

BENCHMARK_MAIN();
