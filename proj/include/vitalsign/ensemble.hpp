#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "vitalsign/tree.hpp"

namespace vitalsign {

struct ForestParams {
    std::size_t n_trees = 60;
    std::uint64_t seed = 0;
    std::size_t mtry = 0;  // 0 = ceil(sqrt(d))
    bool bootstrap = true;
    TreeParams tree;
};

struct ForestModel {
    std::vector<std::unique_ptr<TreeNode>> trees;
    double oob_accuracy = std::numeric_limits<double>::quiet_NaN();
};

// Bagged CART trees with per-split feature subsampling; the score is the
// fraction of trees voting for the positive class.
ForestModel train_random_forest(const Matrix& X, const std::vector<int>& y,
                                const ForestParams& params);

double forest_score(const ForestModel& m, const std::vector<double>& x);

struct AdaBoostParams {
    std::size_t n_rounds = 60;
    TreeParams tree{.max_depth = 3, .min_leaf = 1, .min_gain = 1e-7, .mtry = 0};
};

struct BoostRound {
    double epsilon = 0.0;
    double alpha = 0.0;
    double weight_sum = 0.0;  // after renormalization
};

struct BoostModel {
    std::vector<std::unique_ptr<TreeNode>> trees;
    std::vector<double> alphas;
    std::vector<BoostRound> rounds;  // training diagnostics
};

// AdaBoost.M1 over depth-limited CART learners; stops early on a perfect or
// worse-than-chance round.
BoostModel train_boosted_trees(const Matrix& X, const std::vector<int>& y,
                               const AdaBoostParams& params);

double boost_vote_sum(const BoostModel& m, const std::vector<double>& x);
double boost_score(const BoostModel& m, const std::vector<double>& x);

}  // namespace vitalsign
