#include "augraph/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "augraph/numeric.hpp"

namespace augraph {

std::vector<double> laplacian_spectrum(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("laplacian_spectrum: empty graph");

    // Unweighted combinatorial Laplacian D - A; co-occurrence weights are a
    // data-model detail and deliberately do not change spectra.
    Matrix lap(n, n, 0.0);
    for (const Edge& e : g.edges) {
        lap.at(e.u, e.v) -= 1.0;
        lap.at(e.v, e.u) -= 1.0;
        lap.at(e.u, e.u) += 1.0;
        lap.at(e.v, e.v) += 1.0;
    }

    auto values = jacobi_eigenvalues(std::move(lap));
    for (double& v : values)
        if (v < 0.0 && v >= -1e-9) v = 0.0;
    return values;
}

namespace {

// Smallest prefix of the descending spectrum whose sum reaches
// coverage * total; 1 for the all-zero spectrum of an edgeless graph.
std::size_t coverage_rank(const std::vector<double>& spectrum, double coverage) {
    double total = 0.0;
    for (double v : spectrum) total += v;
    if (total <= 0.0) return 1;
    const double target = coverage * total;
    double prefix = 0.0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        prefix += spectrum[i];
        if (prefix >= target) return i + 1;
    }
    return spectrum.size();
}

}  // namespace

SpectralReport spectral_similarity(const Graph& a, const Graph& b, double coverage) {
    if (!(coverage > 0.0 && coverage <= 1.0))
        throw std::invalid_argument("spectral_similarity: coverage must lie in (0, 1]");

    SpectralReport report;
    report.eigenvalues_a = laplacian_spectrum(a);
    report.eigenvalues_b = laplacian_spectrum(b);
    report.k_a = coverage_rank(report.eigenvalues_a, coverage);
    report.k_b = coverage_rank(report.eigenvalues_b, coverage);
    report.k = std::min(report.k_a, report.k_b);
    for (std::size_t i = 0; i < report.k; ++i) {
        const double la = i < report.eigenvalues_a.size() ? report.eigenvalues_a[i] : 0.0;
        const double lb = i < report.eigenvalues_b.size() ? report.eigenvalues_b[i] : 0.0;
        report.score += (la - lb) * (la - lb);
    }
    return report;
}

double feature_similarity(const Graph& a, const Graph& b) {
    if (a.feature_dim() != b.feature_dim())
        throw std::invalid_argument("feature_similarity: feature dimension mismatch");
    const std::size_t count = std::min(a.node_count(), b.node_count());
    if (count == 0)
        throw std::invalid_argument("feature_similarity: no corresponding nodes");

    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        sum += cosine_similarity(a.features.row(i), b.features.row(i));
    return sum / static_cast<double>(count);
}

double ssim(const Matrix& a, const Matrix& b) {
    constexpr std::size_t kWindow = 7;
    constexpr double kC1 = 0.01 * 0.01;  // (0.01 * L)^2 with L = 1
    constexpr double kC2 = 0.03 * 0.03;

    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("ssim: shape mismatch");
    if (a.rows() < kWindow || a.cols() < kWindow)
        throw std::invalid_argument("ssim: image smaller than the 7x7 window");

    const double n = static_cast<double>(kWindow * kWindow);
    double total = 0.0;
    std::size_t windows = 0;
    for (std::size_t r = 0; r + kWindow <= a.rows(); ++r) {
        for (std::size_t c = 0; c + kWindow <= a.cols(); ++c) {
            double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
            for (std::size_t i = 0; i < kWindow; ++i) {
                for (std::size_t j = 0; j < kWindow; ++j) {
                    const double va = a.at(r + i, c + j);
                    const double vb = b.at(r + i, c + j);
                    sa += va;
                    sb += vb;
                    saa += va * va;
                    sbb += vb * vb;
                    sab += va * vb;
                }
            }
            const double ma = sa / n, mb = sb / n;
            const double var_a = saa / n - ma * ma;  // population moments
            const double var_b = sbb / n - mb * mb;
            const double cov = sab / n - ma * mb;
            total += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
                     ((ma * ma + mb * mb + kC1) * (var_a + var_b + kC2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

FidelityReport fidelity_report(const Graph& a, const Graph& b) {
    FidelityReport report;
    report.spectral = spectral_similarity(a, b);
    report.feature_similarity = feature_similarity(a, b);
    return report;
}

FidelityReport fidelity_report(const Graph& a, const Graph& b, const Matrix& img_a,
                               const Matrix& img_b) {
    FidelityReport report = fidelity_report(a, b);
    report.ssim = ssim(img_a, img_b);
    return report;
}

std::vector<FidelityReport> fidelity_report(const GraphDataset& a, const GraphDataset& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("fidelity_report: datasets differ in size (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    std::vector<FidelityReport> reports;
    reports.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        reports.push_back(fidelity_report(a.graphs[i], b.graphs[i]));
    return reports;
}

}  // namespace augraph
