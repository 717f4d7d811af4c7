#include "vitalsign/ensemble.hpp"

#include <cmath>

#include "vitalsign/error.hpp"
#include "vitalsign/linear.hpp"

namespace vitalsign {

ForestModel train_random_forest(const Matrix& X, const std::vector<int>& y,
                                const ForestParams& params) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "forest needs rows");
    const std::size_t n = X.size(), d = X[0].size();

    TreeParams tp = params.tree;
    tp.mtry = params.mtry == 0
                  ? static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d))))
                  : params.mtry;

    ForestModel m;
    m.trees.reserve(params.n_trees);
    std::vector<std::size_t> oob_votes_pos(n, 0), oob_votes_total(n, 0);

    for (std::size_t t = 0; t < params.n_trees; ++t) {
        Rng rng(mix_seed(params.seed, t));
        Matrix bx;
        std::vector<int> by;
        std::vector<bool> in_bag(n, false);
        if (params.bootstrap) {
            bx.reserve(n);
            by.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t pick = rng.below(n);
                bx.push_back(X[pick]);
                by.push_back(y[pick]);
                in_bag[pick] = true;
            }
        } else {
            bx = X;
            by = y;
            in_bag.assign(n, true);
        }
        auto tree = train_tree(bx, by, tp, {}, &rng);
        if (params.bootstrap) {
            for (std::size_t i = 0; i < n; ++i) {
                if (in_bag[i]) continue;
                ++oob_votes_total[i];
                if (tree_leaf_for(*tree, X[i]).label == 1) ++oob_votes_pos[i];
            }
        }
        m.trees.push_back(std::move(tree));
    }

    if (params.bootstrap) {
        std::size_t covered = 0, correct = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (oob_votes_total[i] == 0) continue;
            ++covered;
            int vote = 2 * oob_votes_pos[i] >= oob_votes_total[i] ? 1 : 0;
            if (vote == y[i]) ++correct;
        }
        if (covered > 0)
            m.oob_accuracy = static_cast<double>(correct) / static_cast<double>(covered);
    }
    return m;
}

double forest_score(const ForestModel& m, const std::vector<double>& x) {
    std::size_t pos = 0;
    for (const auto& t : m.trees)
        if (tree_leaf_for(*t, x).label == 1) ++pos;
    return static_cast<double>(pos) / static_cast<double>(m.trees.size());
}

BoostModel train_boosted_trees(const Matrix& X, const std::vector<int>& y,
                               const AdaBoostParams& params) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "adaboost needs rows");
    const std::size_t n = X.size();

    BoostModel m;
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    for (std::size_t round = 0; round < params.n_rounds; ++round) {
        auto tree = train_tree(X, y, params.tree, weights);
        double eps = 0.0;
        std::vector<int> pred(n);
        for (std::size_t i = 0; i < n; ++i) {
            pred[i] = tree_leaf_for(*tree, X[i]).label;
            if (pred[i] != y[i]) eps += weights[i];
        }
        if (eps >= 0.5) break;  // weak learner no better than chance, drop it

        const double eps_safe = std::max(eps, 1e-10);
        const double alpha = 0.5 * std::log((1.0 - eps_safe) / eps_safe);
        m.trees.push_back(std::move(tree));
        m.alphas.push_back(alpha);

        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double agree = pred[i] == y[i] ? 1.0 : -1.0;
            weights[i] *= std::exp(-alpha * agree);
            sum += weights[i];
        }
        for (double& w : weights) w /= sum;
        double norm_sum = 0.0;
        for (double w : weights) norm_sum += w;
        m.rounds.push_back({eps, alpha, norm_sum});
        if (eps == 0.0) break;  // perfect learner, nothing left to reweight
    }
    return m;
}

double boost_vote_sum(const BoostModel& m, const std::vector<double>& x) {
    double sum = 0.0;
    for (std::size_t t = 0; t < m.trees.size(); ++t)
        sum += m.alphas[t] * (tree_leaf_for(*m.trees[t], x).label == 1 ? 1.0 : -1.0);
    return sum;
}

double boost_score(const BoostModel& m, const std::vector<double>& x) {
    if (m.trees.empty()) return 0.5;
    return sigmoid(boost_vote_sum(m, x));
}

}  // namespace vitalsign
