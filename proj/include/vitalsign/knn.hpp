#pragma once

#include <cstddef>
#include <vector>

#include "vitalsign/features.hpp"

namespace vitalsign {

struct KnnParams {
    std::size_t k = 100;
};

struct KnnModel {
    Matrix train_x;
    std::vector<int> train_y;
    std::size_t k = 100;
};

KnnModel train_knn(const Matrix& X, const std::vector<int>& y, const KnnParams& params);

// Indices of the k nearest training rows, distance ties to the lower index.
std::vector<std::size_t> knn_neighbors(const KnnModel& m, const std::vector<double>& x);

// Fraction of the k nearest neighbors labeled positive.
double knn_score(const KnnModel& m, const std::vector<double>& x);

}  // namespace vitalsign
