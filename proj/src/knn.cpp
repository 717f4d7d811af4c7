#include "vitalsign/knn.hpp"

#include <algorithm>

#include "vitalsign/error.hpp"

namespace vitalsign {

KnnModel train_knn(const Matrix& X, const std::vector<int>& y, const KnnParams& params) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "knn needs rows");
    if (params.k == 0 || params.k > X.size())
        raise(ErrorCode::KTooLarge, "k must be in [1, n_rows]");
    return {X, y, params.k};
}

std::vector<std::size_t> knn_neighbors(const KnnModel& m, const std::vector<double>& x) {
    std::vector<std::pair<double, std::size_t>> order(m.train_x.size());
    for (std::size_t i = 0; i < m.train_x.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            double d = m.train_x[i][j] - x[j];
            s += d * d;
        }
        order[i] = {s, i};
    }
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m.k),
                      order.end());
    std::vector<std::size_t> out(m.k);
    for (std::size_t i = 0; i < m.k; ++i) out[i] = order[i].second;
    return out;
}

double knn_score(const KnnModel& m, const std::vector<double>& x) {
    auto nn = knn_neighbors(m, x);
    std::size_t pos = 0;
    for (std::size_t i : nn)
        if (m.train_y[i] == 1) ++pos;
    return static_cast<double>(pos) / static_cast<double>(m.k);
}

}  // namespace vitalsign
