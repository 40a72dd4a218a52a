#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "augraph/graph.hpp"
#include "augraph/matrix.hpp"

namespace augraph {

// Augmentation-effects measurements: how far an augmented graph drifted from
// its source, in structure (Laplacian spectra) and in features (per-node
// cosine under index correspondence), plus SSIM for raw grayscale images.

// Eigenvalues of the unweighted combinatorial Laplacian D - A (edge weights
// ignored), sorted descending, clamped to 0 from above -1e-9.
std::vector<double> laplacian_spectrum(const Graph& g);

struct SpectralReport {
    std::vector<double> eigenvalues_a;
    std::vector<double> eigenvalues_b;
    std::size_t k_a = 0;  // smallest prefix covering >= coverage of the sum
    std::size_t k_b = 0;
    std::size_t k = 0;    // min(k_a, k_b)
    double score = 0.0;   // sum over i < k of (lambda_a[i] - lambda_b[i])^2
};

// Edgeless graphs (total spectrum 0) get k = 1 by convention.
SpectralReport spectral_similarity(const Graph& a, const Graph& b,
                                   double coverage = 0.9);

// Mean cosine over node pairs (a[i], b[i]) for i < min(n_a, n_b); zero-vector
// rows contribute 0. Throws std::invalid_argument on dimension mismatch or an
// empty correspondence.
double feature_similarity(const Graph& a, const Graph& b);

// Mean SSIM index over all 7x7 sliding windows, uniform weights, population
// moments, C1 = (0.01)^2, C2 = (0.03)^2, dynamic range 1. Inputs must share a
// shape with both sides >= 7.
double ssim(const Matrix& a, const Matrix& b);

struct FidelityReport {
    SpectralReport spectral;
    double feature_similarity = 0.0;
    std::optional<double> ssim;
};

FidelityReport fidelity_report(const Graph& a, const Graph& b);
FidelityReport fidelity_report(const Graph& a, const Graph& b,
                               const Matrix& img_a, const Matrix& img_b);

// Pairs datasets index by index (sizes must match), order-preserving.
std::vector<FidelityReport> fidelity_report(const GraphDataset& a,
                                            const GraphDataset& b);

}  // namespace augraph
