#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arcstab/linalg.hpp"
#include "arcstab/tfa.hpp"

namespace arcstab {

struct ObservationSequence {
    Matrix vectors;                    // T x d, columns [energy, entropy, centroid]
    std::vector<double> frame_times;   // seconds
    std::vector<std::string> feature_names;
    std::vector<std::uint8_t> degenerate;  // per-frame all-zero flag
};

// Per-column affine map to zero mean and unit standard deviation
// (population convention) plus its inverse.
struct Standardizer {
    std::vector<double> means;
    std::vector<double> stds;                // 1.0 where a column was constant
    std::vector<std::uint8_t> constant_cols;

    Matrix apply(const Matrix& raw) const;
    Matrix invert(const Matrix& standardized) const;
};

ObservationSequence build_observations(const Spectrogram& spectrogram);

// Constant columns get std 1 and a flag instead of a divide-by-zero.
std::pair<ObservationSequence, Standardizer> standardize(const ObservationSequence& obs);

struct PcaResult {
    Matrix projected;                        // T x n_components
    std::vector<double> explained_variance_ratios;
    std::vector<double> eigenvalues;         // all d, descending
    Matrix components;                       // d x n_components loading columns
};

// Population-covariance PCA via Jacobi eigendecomposition. Component signs
// are fixed so each column's largest-magnitude loading is positive.
PcaResult pca_project(const ObservationSequence& obs, std::size_t n_components);

struct SilhouetteResult {
    std::vector<double> scores;
    double mean = 0.0;
};

// s_i = (b_i - a_i)/max(a_i, b_i) with Euclidean distances on obs.vectors.
// Singletons score 0; requires at least two distinct labels.
SilhouetteResult silhouette_scores(const ObservationSequence& obs, const std::vector<int>& labels);

}  // namespace arcstab
