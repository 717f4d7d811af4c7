#pragma once

#include <cstdint>
#include <vector>

#include "vitalsign/linear.hpp"

namespace vitalsign {

struct LinearSvmParams {
    double C = 1.0;
    std::size_t epochs = 30;
    std::uint64_t seed = 0;
};

// Primal hinge-loss minimization, Pegasos-style subgradient epochs with
// lambda = 1/(C n) and an unregularized bias. Deterministic under seed.
LinearScorer train_linear_svm(const Matrix& X, const std::vector<int>& y,
                              const LinearSvmParams& params);

// lambda/2 |w|^2 + mean hinge loss, the quantity the trainer descends.
double linear_svm_objective(const Matrix& X, const std::vector<int>& y, double C,
                            const LinearScorer& m);

struct GaussianSvmParams {
    double C = 10.0;
    double gamma = 0.5;
    double tol = 1e-3;
    std::size_t max_passes = 10;
};

struct GaussianSvmModel {
    Matrix support_x;            // full training set; alpha 0 rows kept
    std::vector<int> labels_pm;  // +1 / -1
    std::vector<double> alphas;
    double bias = 0.0;
    double gamma = 0.5;
    double C = 10.0;
};

// Dual SMO with an RBF kernel; the pairwise update keeps sum alpha_i y_i = 0
// exact and the box constraint is enforced by clipping.
GaussianSvmModel train_gaussian_svm(const Matrix& X, const std::vector<int>& y,
                                    const GaussianSvmParams& params);

double gaussian_svm_decision(const GaussianSvmModel& m, const std::vector<double>& x);

}  // namespace vitalsign
