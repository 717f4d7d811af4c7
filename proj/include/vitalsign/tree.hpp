#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "vitalsign/features.hpp"
#include "vitalsign/rng.hpp"

namespace vitalsign {

// Gini diversity index 1 - sum p(i)^2 of a discrete distribution.
double gini(const std::vector<double>& fractions);

struct TreeNode {
    bool leaf = true;
    // branch fields
    std::size_t feature = 0;
    double threshold = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
    // shared fields
    double gdi = 0.0;
    double probability = 1.0;  // fraction of training rows reaching this node
    // leaf fields
    int label = 0;
    std::array<double, 2> fractions{1.0, 0.0};  // class 0 / class 1 shares
};

struct TreeParams {
    std::size_t max_depth = 32;
    std::size_t min_leaf = 1;
    double min_gain = 1e-7;
    std::size_t mtry = 0;  // features tried per split; 0 = all
};

// Greedy CART on binary labels. Splits maximize the weighted GDI decrease
// over midpoint thresholds; ties go to the lowest feature index, then the
// smallest threshold. Deterministic unless mtry sampling is requested.
std::unique_ptr<TreeNode> train_tree(const Matrix& X, const std::vector<int>& y,
                                     const TreeParams& params,
                                     const std::vector<double>& sample_weights = {},
                                     Rng* rng = nullptr);

double node_risk(const TreeNode& n);

const TreeNode& tree_leaf_for(const TreeNode& root, const std::vector<double>& x);

// Positive-class fraction at the reached leaf.
double tree_score(const TreeNode& root, const std::vector<double>& x);

// Mean per-branch risk reduction attributed to each splitting feature;
// unused features score 0. Throws NoBranches on a single-leaf tree.
std::vector<double> predictor_importance(const TreeNode& root, std::size_t feature_count);

std::size_t count_branches(const TreeNode& root);

}  // namespace vitalsign
