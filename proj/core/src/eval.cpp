#include "augraph/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "augraph/numeric.hpp"
#include "augraph/parallel.hpp"
#include "augraph/rng.hpp"

namespace augraph {

namespace {

Matrix normalized_rows(const Matrix& m, const char* op) {
    Matrix out = m;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        auto row = out.row(i);
        const double len = norm(row);
        if (len == 0.0)
            throw std::invalid_argument(std::string(op) + ": zero-norm representation at row " +
                                        std::to_string(i));
        for (double& v : row) v /= len;
    }
    return out;
}

double population_std(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / xs.size());
}

}  // namespace

// ---------------------------------------------------------------------------
// NT-XENT
// ---------------------------------------------------------------------------

double nt_xent(const Matrix& z_first, const Matrix& z_second, double tau) {
    const std::size_t n = z_first.rows();
    if (n == 0) throw std::invalid_argument("nt_xent: empty batch");
    if (z_second.rows() != n)
        throw std::invalid_argument("nt_xent: view batches differ in size");
    if (z_first.cols() != z_second.cols())
        throw std::invalid_argument("nt_xent: view dimensions differ");
    if (!(tau > 0.0)) throw std::invalid_argument("nt_xent: temperature must be positive");

    // Stack both views; row i and row i + n are a positive pair.
    Matrix z(2 * n, z_first.cols());
    std::copy(z_first.data().begin(), z_first.data().end(), z.data().begin());
    std::copy(z_second.data().begin(), z_second.data().end(),
              z.data().begin() + static_cast<std::ptrdiff_t>(n * z_first.cols()));
    z = normalized_rows(z, "nt_xent");

    const std::size_t rows = 2 * n;
    double total = 0.0;
    std::vector<double> sims(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto zi = z.row(i);
        double max_sim = -2.0;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == i) continue;
            sims[k] = dot(zi, z.row(k));
            max_sim = std::max(max_sim, sims[k]);
        }
        // Log-sum-exp with a max shift; harmless at these magnitudes but
        // keeps small temperatures usable.
        double denom = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == i) continue;
            denom += std::exp((sims[k] - max_sim) / tau);
        }
        const std::size_t partner = i < n ? i + n : i - n;
        total += -(sims[partner] - max_sim) / tau + std::log(denom);
    }
    return total / static_cast<double>(rows);
}

// ---------------------------------------------------------------------------
// Similarity matrix
// ---------------------------------------------------------------------------

SimilarityReport similarity_matrix(const EmbeddingMatrix& emb) {
    const std::size_t n = emb.rows.rows();
    if (n < 2) throw std::invalid_argument("similarity_matrix: need at least 2 rows");
    if (emb.labels.size() != n)
        throw std::invalid_argument("similarity_matrix: label count does not match rows");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return emb.labels[a] < emb.labels[b]; });

    Matrix sorted(n, emb.rows.cols());
    SimilarityReport report;
    report.sorted_labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(emb.rows.row(order[i]).begin(), emb.rows.row(order[i]).end(),
                  sorted.row(i).begin());
        report.sorted_labels[i] = emb.labels[order[i]];
    }
    sorted = normalized_rows(sorted, "similarity_matrix");

    report.matrix = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        report.matrix.at(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = dot(sorted.row(i), sorted.row(j));
            report.matrix.at(i, j) = s;
            report.matrix.at(j, i) = s;
        }
    }

    for (std::size_t i = 1; i <= n; ++i)
        if (i == n || report.sorted_labels[i] != report.sorted_labels[i - 1])
            report.class_boundaries.push_back(i);

    double intra = 0.0, inter = 0.0;
    std::size_t intra_count = 0, inter_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (report.sorted_labels[i] == report.sorted_labels[j]) {
                intra += report.matrix.at(i, j);
                ++intra_count;
            } else {
                inter += report.matrix.at(i, j);
                ++inter_count;
            }
        }
    }
    report.intra_mean = intra_count ? intra / intra_count : 0.0;
    report.inter_mean = inter_count ? inter / inter_count : 0.0;
    report.passes = report.intra_mean > report.inter_mean;
    return report;
}

// ---------------------------------------------------------------------------
// kNN
// ---------------------------------------------------------------------------

std::vector<std::size_t> stratified_folds(const std::vector<int>& labels,
                                          std::size_t folds, std::uint64_t seed) {
    if (folds < 2) throw std::invalid_argument("stratified_folds: need at least 2 folds");

    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

    SplitMix64 rng(seed);
    std::vector<std::size_t> fold_of(labels.size(), 0);
    for (auto& [label, members] : by_class) {
        if (members.size() < folds)
            throw std::invalid_argument("stratified_folds: class " + std::to_string(label) +
                                        " has " + std::to_string(members.size()) +
                                        " members, fewer than " + std::to_string(folds) +
                                        " folds");
        shuffle(rng, members);
        for (std::size_t r = 0; r < members.size(); ++r) fold_of[members[r]] = r % folds;
    }
    return fold_of;
}

KnnResult knn_accuracy(const EmbeddingMatrix& emb, std::size_t k, std::size_t folds,
                       std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("knn_accuracy: k must be >= 1");
    const std::size_t n = emb.rows.rows();
    const auto fold_of = stratified_folds(emb.labels, folds, seed);
    const Matrix unit = normalized_rows(emb.rows, "knn_accuracy");

    KnnResult result;
    result.fold_accuracies.resize(folds);
    parallel_for(folds, [&](std::size_t f) {
        std::vector<std::size_t> train, test;
        for (std::size_t i = 0; i < n; ++i) (fold_of[i] == f ? test : train).push_back(i);

        std::size_t correct = 0;
        std::vector<std::pair<double, std::size_t>> dist;  // (cosine distance, train slot)
        for (std::size_t t : test) {
            dist.clear();
            for (std::size_t slot = 0; slot < train.size(); ++slot)
                dist.emplace_back(1.0 - dot(unit.row(t), unit.row(train[slot])), slot);
            const std::size_t kk = std::min(k, dist.size());
            // Ties resolve to the smaller training row index: slots ascend
            // with row index, and the pair's second field breaks equal
            // distances.
            std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());

            std::map<int, std::size_t> votes;
            for (std::size_t r = 0; r < kk; ++r) ++votes[emb.labels[train[dist[r].second]]];
            int best_class = 0;
            std::size_t best_votes = 0;
            for (const auto& [cls, count] : votes) {
                if (count > best_votes) {  // ties keep the smaller class id
                    best_votes = count;
                    best_class = cls;
                }
            }
            if (best_class == emb.labels[t]) ++correct;
        }
        result.fold_accuracies[f] =
            test.empty() ? 0.0 : static_cast<double>(correct) / test.size();
    });

    result.mean_accuracy =
        std::accumulate(result.fold_accuracies.begin(), result.fold_accuracies.end(), 0.0) /
        folds;
    result.std_accuracy = population_std(result.fold_accuracies);
    return result;
}

// ---------------------------------------------------------------------------
// Linear probe
// ---------------------------------------------------------------------------

namespace {

struct ProbeBatch {
    Matrix x;  // standardized features
    std::vector<int> y;
};

// Softmax probabilities for one standardized row.
void softmax_row(const LinearProbe& probe, std::span<const double> x,
                 std::vector<double>& p) {
    const std::size_t classes = probe.weights.rows();
    p.resize(classes);
    double max_logit = -1e300;
    for (std::size_t c = 0; c < classes; ++c) {
        double z = probe.bias[c];
        const auto w = probe.weights.row(c);
        for (std::size_t d = 0; d < w.size(); ++d) z += w[d] * x[d];
        p[c] = z;
        max_logit = std::max(max_logit, z);
    }
    double sum = 0.0;
    for (double& v : p) {
        v = std::exp(v - max_logit);
        sum += v;
    }
    for (double& v : p) v /= sum;
}

// Objective J = mean cross-entropy + (l2/2)||W||^2 (biases unregularized),
// via one forward pass over the standardized batch.
double probe_objective(const LinearProbe& probe, const ProbeBatch& batch, double l2) {
    std::vector<double> p;
    double loss = 0.0;
    for (std::size_t i = 0; i < batch.x.rows(); ++i) {
        softmax_row(probe, batch.x.row(i), p);
        loss += -std::log(std::max(p[static_cast<std::size_t>(batch.y[i])], 1e-300));
    }
    loss /= static_cast<double>(batch.x.rows());
    double reg = 0.0;
    for (double w : probe.weights.data()) reg += w * w;
    return loss + 0.5 * l2 * reg;
}

}  // namespace

LinearProbe train_linear_probe(const EmbeddingMatrix& emb, const ProbeConfig& config) {
    const std::size_t n = emb.rows.rows();
    const std::size_t dim = emb.rows.cols();
    if (n == 0) throw std::invalid_argument("train_linear_probe: empty training set");
    if (emb.labels.size() != n)
        throw std::invalid_argument("train_linear_probe: label count does not match rows");

    int max_label = 0;
    std::map<int, std::size_t> class_sizes;
    for (int y : emb.labels) {
        if (y < 0) throw std::invalid_argument("train_linear_probe: negative class id");
        max_label = std::max(max_label, y);
        ++class_sizes[y];
    }
    if (class_sizes.size() < 2)
        throw std::invalid_argument("train_linear_probe: training set has a single class");
    const std::size_t classes = static_cast<std::size_t>(max_label) + 1;

    LinearProbe probe;
    probe.class_count = static_cast<int>(classes);
    probe.mean.assign(dim, 0.0);
    probe.stdev.assign(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = emb.rows.row(i);
        for (std::size_t d = 0; d < dim; ++d) probe.mean[d] += row[d];
    }
    for (double& m : probe.mean) m /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = emb.rows.row(i);
        for (std::size_t d = 0; d < dim; ++d) {
            const double c = row[d] - probe.mean[d];
            probe.stdev[d] += c * c;
        }
    }
    for (double& s : probe.stdev) s = std::max(std::sqrt(s / static_cast<double>(n)), 1e-8);

    ProbeBatch batch;
    batch.x = Matrix(n, dim);
    batch.y = emb.labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = emb.rows.row(i);
        auto dst = batch.x.row(i);
        for (std::size_t d = 0; d < dim; ++d) dst[d] = (src[d] - probe.mean[d]) / probe.stdev[d];
    }

    probe.weights = Matrix(classes, dim, 0.0);
    probe.bias.assign(classes, 0.0);

    Matrix grad_w(classes, dim);
    std::vector<double> grad_b(classes), p;
    probe.loss_history.reserve(config.epochs + 1);
    probe.loss_history.push_back(probe_objective(probe, batch, config.l2_lambda));

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        std::fill(grad_w.data().begin(), grad_w.data().end(), 0.0);
        std::fill(grad_b.begin(), grad_b.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = batch.x.row(i);
            softmax_row(probe, x, p);
            p[static_cast<std::size_t>(batch.y[i])] -= 1.0;
            for (std::size_t c = 0; c < classes; ++c) {
                const double coeff = p[c];
                if (coeff == 0.0) continue;
                auto g = grad_w.row(c);
                for (std::size_t d = 0; d < dim; ++d) g[d] += coeff * x[d];
                grad_b[c] += coeff;
            }
        }
        const double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t c = 0; c < classes; ++c) {
            auto w = probe.weights.row(c);
            const auto g = grad_w.row(c);
            for (std::size_t d = 0; d < dim; ++d)
                w[d] -= config.learning_rate * (g[d] * inv_n + config.l2_lambda * w[d]);
            probe.bias[c] -= config.learning_rate * grad_b[c] * inv_n;
        }
        probe.loss_history.push_back(probe_objective(probe, batch, config.l2_lambda));
    }
    probe.final_loss = probe.loss_history.back();
    return probe;
}

ProbeEval probe_eval(const LinearProbe& probe, const EmbeddingMatrix& emb) {
    const std::size_t n = emb.rows.rows();
    if (n == 0) throw std::invalid_argument("probe_eval: empty evaluation set");
    if (emb.rows.cols() != probe.mean.size())
        throw std::invalid_argument("probe_eval: feature dimension mismatch");

    std::vector<double> x(probe.mean.size()), p;
    std::size_t correct = 0;
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int y = emb.labels[i];
        if (y < 0 || y >= probe.class_count)
            throw std::invalid_argument("probe_eval: label " + std::to_string(y) +
                                        " outside the probe's class range");
        const auto src = emb.rows.row(i);
        for (std::size_t d = 0; d < x.size(); ++d)
            x[d] = (src[d] - probe.mean[d]) / probe.stdev[d];
        softmax_row(probe, x, p);

        std::size_t pred = 0;
        for (std::size_t c = 1; c < p.size(); ++c)
            if (p[c] > p[pred]) pred = c;  // ties keep the smaller class id
        if (static_cast<int>(pred) == y) ++correct;
        loss += -std::log(std::max(p[static_cast<std::size_t>(y)], 1e-300));
    }
    return ProbeEval{static_cast<double>(correct) / n, loss / n};
}

ProbeCvResult probe_cv(const EmbeddingMatrix& emb, const ProbeConfig& config,
                       std::size_t folds) {
    const std::size_t n = emb.rows.rows();
    const auto fold_of = stratified_folds(emb.labels, folds, config.seed);

    ProbeCvResult result;
    result.fold_accuracies.resize(folds);
    parallel_for(folds, [&](std::size_t f) {
        EmbeddingMatrix train, test;
        std::vector<std::size_t> train_rows, test_rows;
        for (std::size_t i = 0; i < n; ++i)
            (fold_of[i] == f ? test_rows : train_rows).push_back(i);

        auto take = [&](const std::vector<std::size_t>& rows) {
            EmbeddingMatrix subset;
            subset.rows = Matrix(rows.size(), emb.rows.cols());
            subset.labels.reserve(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                std::copy(emb.rows.row(rows[r]).begin(), emb.rows.row(rows[r]).end(),
                          subset.rows.row(r).begin());
                subset.labels.push_back(emb.labels[rows[r]]);
            }
            return subset;
        };
        train = take(train_rows);
        test = take(test_rows);

        const LinearProbe probe = train_linear_probe(train, config);
        result.fold_accuracies[f] = probe_eval(probe, test).accuracy;
    });

    result.mean_accuracy =
        std::accumulate(result.fold_accuracies.begin(), result.fold_accuracies.end(), 0.0) /
        folds;
    result.std_accuracy = population_std(result.fold_accuracies);
    return result;
}

// ---------------------------------------------------------------------------
// Affinity audit
// ---------------------------------------------------------------------------

AffinityReport affinity_audit(const GraphDataset& ds, const AugmentationSpec& spec,
                              const EncoderConfig& enc_config,
                              const ProbeConfig& probe_config,
                              const EmbeddingTable* table) {
    const Encoder enc = init_encoder(enc_config, ds.feature_dim());
    const EmbeddingMatrix clean = embed_dataset(enc, ds);
    const LinearProbe probe = train_linear_probe(clean, probe_config);

    const GraphDataset augmented_ds = apply_dataset(spec, ds, table);
    const EmbeddingMatrix augmented = embed_dataset(enc, augmented_ds);

    const ProbeEval clean_eval = probe_eval(probe, clean);
    const ProbeEval augmented_eval = probe_eval(probe, augmented);
    const LinearProbe augmented_probe = train_linear_probe(augmented, probe_config);

    AffinityReport report;
    report.clean_accuracy = clean_eval.accuracy;
    report.augmented_accuracy = augmented_eval.accuracy;
    report.affinity = report.clean_accuracy - report.augmented_accuracy;
    report.clean_loss = probe.final_loss;
    report.augmented_loss = augmented_probe.final_loss;
    report.diversity = report.augmented_loss - report.clean_loss;
    return report;
}

}  // namespace augraph
