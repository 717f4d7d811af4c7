#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vitalsign/features.hpp"

namespace vitalsign {

struct OversampleConfig {
    double target_ratio = 1.0;  // minority:majority after oversampling
    std::size_t k_majority = 5;  // neighbors for cluster weighting
    std::size_t k_intra = 5;     // interpolation neighbors inside a cluster
    double linkage_threshold_quantile = 0.9;
    std::uint64_t seed = 0;
};

struct BalancedSet {
    Matrix rows;              // originals first, synthetics appended
    std::vector<int> labels;
    std::vector<bool> synthetic;
    // for each synthetic row: indices (into rows) of its two minority parents
    std::vector<std::pair<std::size_t, std::size_t>> parents;
    std::vector<double> cluster_weights;  // nonnegative, sums to 1
    std::size_t n_synthetic = 0;
};

// Adaptive weighted oversampling of the minority class: average-linkage
// clusters cut at a distance quantile with a majority-midpoint merge veto,
// cluster weights from inverse distance to the k nearest majority rows, and
// synthetic rows interpolated between same-cluster neighbors.
BalancedSet oversample(const Matrix& X, const std::vector<int>& y, const OversampleConfig& cfg);

}  // namespace vitalsign
