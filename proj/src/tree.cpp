#include "vitalsign/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vitalsign/error.hpp"

namespace vitalsign {

double gini(const std::vector<double>& fractions) {
    double sum = 0.0, sq = 0.0;
    for (double p : fractions) {
        if (p < -1e-12 || !std::isfinite(p))
            raise(ErrorCode::InvalidDistribution, "fractions must be nonnegative");
        sum += p;
        sq += p * p;
    }
    if (std::abs(sum - 1.0) > 1e-9) raise(ErrorCode::InvalidDistribution, "fractions must sum to 1");
    return 1.0 - sq;
}

namespace {

double gini2(double c0, double c1) {
    double m = c0 + c1;
    double p0 = c0 / m, p1 = c1 / m;
    return 1.0 - (p0 * p0 + p1 * p1);
}

struct Builder {
    const Matrix& X;
    const std::vector<int>& y;
    const TreeParams& params;
    const std::vector<double>& w;
    double total_weight;
    Rng* rng;
    std::size_t n_features;

    std::unique_ptr<TreeNode> build(std::vector<std::size_t>& idx, std::size_t depth) {
        auto node = std::make_unique<TreeNode>();
        double c0 = 0.0, c1 = 0.0;
        for (std::size_t i : idx) (y[i] == 1 ? c1 : c0) += w[i];
        node->gdi = gini2(c0, c1);
        node->probability = (c0 + c1) / total_weight;
        node->fractions = {c0 / (c0 + c1), c1 / (c0 + c1)};
        node->label = c1 > c0 ? 1 : 0;

        if (c0 == 0.0 || c1 == 0.0 || depth >= params.max_depth ||
            idx.size() < 2 * params.min_leaf)
            return node;

        std::size_t best_feature = 0;
        double best_threshold = 0.0, best_gain = -1.0;
        bool found = false;

        std::vector<std::size_t> features(n_features);
        std::iota(features.begin(), features.end(), 0);
        if (params.mtry > 0 && params.mtry < n_features && rng != nullptr) {
            rng->shuffle(features);
            features.resize(params.mtry);
            std::sort(features.begin(), features.end());
        }

        std::vector<std::pair<double, std::size_t>> order(idx.size());
        for (std::size_t f : features) {
            for (std::size_t k = 0; k < idx.size(); ++k) order[k] = {X[idx[k]][f], idx[k]};
            std::sort(order.begin(), order.end());
            double l0 = 0.0, l1 = 0.0;
            std::size_t n_left = 0;
            for (std::size_t k = 0; k + 1 < order.size(); ++k) {
                std::size_t i = order[k].second;
                (y[i] == 1 ? l1 : l0) += w[i];
                ++n_left;
                if (order[k].first == order[k + 1].first) continue;
                if (n_left < params.min_leaf || idx.size() - n_left < params.min_leaf) continue;
                double r0 = c0 - l0, r1 = c1 - l1;
                double wl = l0 + l1, wr = r0 + r1;
                double gain = node->gdi -
                              (wl / (c0 + c1)) * gini2(l0, l1) -
                              (wr / (c0 + c1)) * gini2(r0, r1);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_feature = f;
                    best_threshold = (order[k].first + order[k + 1].first) / 2.0;
                    found = true;
                }
            }
        }
        if (!found || best_gain < params.min_gain) return node;

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx)
            (X[i][best_feature] <= best_threshold ? left_idx : right_idx).push_back(i);
        node->leaf = false;
        node->feature = best_feature;
        node->threshold = best_threshold;
        node->left = build(left_idx, depth + 1);
        node->right = build(right_idx, depth + 1);
        return node;
    }
};

}  // namespace

std::unique_ptr<TreeNode> train_tree(const Matrix& X, const std::vector<int>& y,
                                     const TreeParams& params,
                                     const std::vector<double>& sample_weights, Rng* rng) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "tree needs rows");
    for (int label : y)
        if (label != 0 && label != 1) raise(ErrorCode::InvalidDistribution, "labels must be 0/1");

    std::vector<double> w = sample_weights;
    if (w.empty()) w.assign(X.size(), 1.0);
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(total > 0.0)) raise(ErrorCode::InvalidDistribution, "weights must have positive sum");

    Builder b{X, y, params, w, total, rng, X[0].size()};
    std::vector<std::size_t> idx(X.size());
    std::iota(idx.begin(), idx.end(), 0);
    return b.build(idx, 0);
}

double node_risk(const TreeNode& n) { return n.gdi * n.probability; }

const TreeNode& tree_leaf_for(const TreeNode& root, const std::vector<double>& x) {
    const TreeNode* node = &root;
    while (!node->leaf) node = x[node->feature] <= node->threshold ? node->left.get() : node->right.get();
    return *node;
}

double tree_score(const TreeNode& root, const std::vector<double>& x) {
    return tree_leaf_for(root, x).fractions[1];
}

std::size_t count_branches(const TreeNode& root) {
    if (root.leaf) return 0;
    return 1 + count_branches(*root.left) + count_branches(*root.right);
}

namespace {

void accumulate_importance(const TreeNode& n, std::vector<double>& imp) {
    if (n.leaf) return;
    imp[n.feature] += node_risk(n) - node_risk(*n.left) - node_risk(*n.right);
    accumulate_importance(*n.left, imp);
    accumulate_importance(*n.right, imp);
}

}  // namespace

std::vector<double> predictor_importance(const TreeNode& root, std::size_t feature_count) {
    std::size_t branches = count_branches(root);
    if (branches == 0) raise(ErrorCode::NoBranches, "single-leaf tree has no importances");
    std::vector<double> imp(feature_count, 0.0);
    accumulate_importance(root, imp);
    for (double& v : imp) v /= static_cast<double>(branches);
    return imp;
}

}  // namespace vitalsign
