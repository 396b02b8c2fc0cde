#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scattex/features.hpp"

namespace scattex {

/// Per-class affine subspace: mean plus up to `requested_dim` orthonormal
/// principal directions of the centered class training columns.
struct ClassModel {
    std::string label;
    std::vector<double> mean;
    std::vector<std::vector<double>> basis; // orthonormal directions, each of size dims
};

struct ClassifierModel {
    std::size_t dims = 0;
    std::size_t requested_dim = 0;
    std::vector<ClassModel> classes; // in first-appearance order of the training labels
};

/// Fits one affine-PCA model per class: column mean plus the top-d left
/// singular directions of the centered class submatrix. Classes that cannot
/// supply d directions keep what they can.
ClassifierModel fit(const FeatureMatrix& train, std::size_t d);

/// Nearest affine subspace by residual norm; ties break to the earlier class.
std::string predict(const ClassifierModel& model, const std::vector<double>& x);

/// Squared residual of x against one class model.
double residual_sq(const ClassModel& cls, const std::vector<double>& x);

struct SplitSpec {
    std::size_t train_per_class = 41;
    std::size_t n_splits = 10;
    std::uint64_t seed = 0;
};

struct SplitResult {
    double mean_accuracy = 0.0;        // percent
    std::vector<double> per_split;     // percent per split
};

/// Random train/test partitions per class, drawn from a mt19937_64-based
/// Fisher-Yates shuffle seeded by (seed, split index), so results are
/// bit-reproducible for fixed inputs.
SplitResult evaluate_splits(const FeatureMatrix& features, const SplitSpec& spec, std::size_t d);

/// The per-class train/test column indices of one split. Exposed so the
/// harness can verify split identity across feature sets.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};
SplitIndices split_indices(const std::vector<std::string>& labels, const SplitSpec& spec,
                           std::size_t split_index);

} // namespace scattex
