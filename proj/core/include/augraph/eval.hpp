#pragma once

#include <cstdint>
#include <vector>

#include "augraph/augment.hpp"
#include "augraph/encoder.hpp"
#include "augraph/graph.hpp"
#include "augraph/matrix.hpp"

namespace augraph {

struct EmbeddingTable;

// ---------------------------------------------------------------------------
// NT-XENT contrastive loss diagnostic. Rows i of z_first and z_second form a
// positive pair; the 2N stacked rows supply in-batch negatives. Returns the
// mean of -log(exp(sim(z_i, z_j)/tau) / sum_{k != i} exp(sim(z_i, z_k)/tau))
// over all 2N ordered positive pairs, sim = cosine. Throws on zero-norm rows,
// dimension mismatch, N = 0 or tau <= 0.
// ---------------------------------------------------------------------------

double nt_xent(const Matrix& z_first, const Matrix& z_second, double tau = 0.5);

// ---------------------------------------------------------------------------
// Representation-similarity sanity check: all-pairs cosine matrix with rows
// sorted by class (stable within class). The heuristic passes when mean
// same-class similarity exceeds mean cross-class similarity.
// ---------------------------------------------------------------------------

struct SimilarityReport {
    Matrix matrix;                  // symmetric, unit diagonal
    std::vector<int> sorted_labels; // label per matrix row
    std::vector<std::size_t> class_boundaries;  // exclusive end of each class block
    double intra_mean = 0.0;
    double inter_mean = 0.0;
    bool passes = false;            // intra_mean > inter_mean
};

// Requires >= 2 rows; throws on a zero-norm row, naming its index.
SimilarityReport similarity_matrix(const EmbeddingMatrix& emb);

// ---------------------------------------------------------------------------
// kNN accuracy under stratified k-fold cross-validation with cosine distance.
// ---------------------------------------------------------------------------

// Deterministic stratified fold assignment: per class (ascending id), member
// indices are shuffled and dealt round-robin to folds. Returns fold id per
// row. Throws when some class has fewer members than folds.
std::vector<std::size_t> stratified_folds(const std::vector<int>& labels,
                                          std::size_t folds, std::uint64_t seed);

struct KnnResult {
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;  // population std over folds
    std::vector<double> fold_accuracies;
};

// Majority vote among the k nearest training rows; distance ties prefer the
// smaller training row index, vote ties the smaller class id.
KnnResult knn_accuracy(const EmbeddingMatrix& emb, std::size_t k = 5,
                       std::size_t folds = 10, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Linear probe: L2-regularized multinomial logistic regression trained by
// full-batch gradient descent on standardized features. Objective
// J(W, b) = mean cross-entropy + (l2_lambda / 2) * ||W||^2.
// ---------------------------------------------------------------------------

struct ProbeConfig {
    double learning_rate = 0.1;
    std::size_t epochs = 500;
    double l2_lambda = 1e-3;
    // Training itself is deterministic (zero init, full batch); the seed
    // feeds resampling workflows such as probe_cv.
    std::uint64_t seed = 0;
};

struct LinearProbe {
    Matrix weights;             // class_count x dim
    std::vector<double> bias;   // class_count
    std::vector<double> mean;   // training-feature standardization
    std::vector<double> stdev;  // floored at 1e-8
    int class_count = 0;
    double final_loss = 0.0;    // objective J after the last epoch
    std::vector<double> loss_history;  // J per epoch
};

// Throws when fewer than 2 classes appear in the training rows.
LinearProbe train_linear_probe(const EmbeddingMatrix& emb, const ProbeConfig& config);

struct ProbeEval {
    double accuracy = 0.0;
    double mean_loss = 0.0;  // unregularized mean cross-entropy
};

// Applies the frozen standardization, then scores the given rows.
ProbeEval probe_eval(const LinearProbe& probe, const EmbeddingMatrix& emb);

struct ProbeCvResult {
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;  // population std over folds
    std::vector<double> fold_accuracies;
};

// Stratified k-fold cross-validation of the probe (folds drawn with
// config.seed).
ProbeCvResult probe_cv(const EmbeddingMatrix& emb, const ProbeConfig& config,
                       std::size_t folds = 10);

// ---------------------------------------------------------------------------
// Affinity/diversity audit. One fixed pipeline: random encoder over the clean
// dataset, probe trained on those embeddings, then the same encoder and a
// second probe over the augmented dataset.
//   affinity  = clean accuracy - augmented accuracy of the clean-trained probe
//   diversity = final training loss (augmented probe) - final training loss
//               (clean probe)
// Identity augmentation yields exact zeros for both.
// ---------------------------------------------------------------------------

struct AffinityReport {
    double clean_accuracy = 0.0;
    double augmented_accuracy = 0.0;
    double affinity = 0.0;
    double clean_loss = 0.0;
    double augmented_loss = 0.0;
    double diversity = 0.0;
};

AffinityReport affinity_audit(const GraphDataset& ds, const AugmentationSpec& spec,
                              const EncoderConfig& enc_config,
                              const ProbeConfig& probe_config,
                              const EmbeddingTable* table = nullptr);

}  // namespace augraph
