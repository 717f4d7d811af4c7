#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "vitalsign/features.hpp"

namespace vitalsign {

inline double sigmoid(double z) {
    return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
}

// score = sigmoid(w . x + b); shared by LDA, logistic regression, linear SVM
struct LinearScorer {
    std::vector<double> weights;
    double bias = 0.0;
};

double linear_margin(const LinearScorer& m, const std::vector<double>& x);

// Shared-covariance linear discriminant with empirical priors; the score is
// the positive-class posterior. A small ridge is added when the pooled
// covariance is not positive definite.
LinearScorer train_lda(const Matrix& X, const std::vector<int>& y);

struct LogisticParams {
    double l2 = 1e-4;
    std::size_t max_iter = 500;
    double tol = 1e-6;
};

struct LogisticResult {
    LinearScorer scorer;
    bool converged = false;
    std::size_t iterations = 0;
    double grad_norm = 0.0;
};

// L2-regularized maximum likelihood by gradient descent with backtracking.
LogisticResult train_logistic(const Matrix& X, const std::vector<int>& y,
                              const LogisticParams& params);

// Regularized mean negative log-likelihood and its gradient at (w, b);
// grad has d+1 entries, bias last. The bias is not penalized.
double logistic_loss(const Matrix& X, const std::vector<int>& y, double l2,
                     const std::vector<double>& w, double b, std::vector<double>* grad);

}  // namespace vitalsign
