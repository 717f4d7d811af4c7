#include "vitalsign/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vitalsign/error.hpp"
#include "vitalsign/rng.hpp"

namespace vitalsign {

namespace {

int to_pm(int label) { return label == 1 ? 1 : -1; }

double rbf(const std::vector<double>& a, const std::vector<double>& b, double gamma) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double d = a[j] - b[j];
        s += d * d;
    }
    return std::exp(-gamma * s);
}

}  // namespace

LinearScorer train_linear_svm(const Matrix& X, const std::vector<int>& y,
                              const LinearSvmParams& params) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "svm needs rows");
    const std::size_t n = X.size(), d = X[0].size();
    const double lambda = 1.0 / (params.C * static_cast<double>(n));

    // bias handled as a constant augmented feature
    std::vector<double> w(d + 1, 0.0);
    Rng rng(params.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    double t = 1.0;
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
            const double eta = 1.0 / (lambda * t);
            const double yi = to_pm(y[i]);
            double margin = w[d];
            for (std::size_t j = 0; j < d; ++j) margin += w[j] * X[i][j];
            const double shrink = 1.0 - eta * lambda;
            for (double& v : w) v *= shrink;
            if (yi * margin < 1.0) {
                for (std::size_t j = 0; j < d; ++j) w[j] += eta * yi * X[i][j];
                w[d] += eta * yi;
            }
            t += 1.0;
        }
    }
    LinearScorer m;
    m.bias = w[d];
    w.pop_back();
    m.weights = std::move(w);
    return m;
}

double linear_svm_objective(const Matrix& X, const std::vector<int>& y, double C,
                            const LinearScorer& m) {
    const std::size_t n = X.size();
    const double lambda = 1.0 / (C * static_cast<double>(n));
    double obj = 0.0;
    for (double w : m.weights) obj += w * w;
    obj *= 0.5 * lambda;
    double hinge = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        hinge += std::max(0.0, 1.0 - to_pm(y[i]) * linear_margin(m, X[i]));
    return obj + hinge / static_cast<double>(n);
}

GaussianSvmModel train_gaussian_svm(const Matrix& X, const std::vector<int>& y,
                                    const GaussianSvmParams& params) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "svm needs rows");
    const std::size_t n = X.size();

    GaussianSvmModel m;
    m.support_x = X;
    m.gamma = params.gamma;
    m.C = params.C;
    m.labels_pm.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.labels_pm[i] = to_pm(y[i]);
    m.alphas.assign(n, 0.0);
    m.bias = 0.0;

    std::vector<std::vector<double>> K(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) K[i][j] = K[j][i] = rbf(X[i], X[j], params.gamma);

    // error cache: E[i] = f(x_i) - y_i, maintained incrementally
    std::vector<double> E(n);
    for (std::size_t i = 0; i < n; ++i) E[i] = m.bias - m.labels_pm[i];

    const double C = params.C, tol = params.tol;
    std::size_t passes = 0;
    while (passes < params.max_passes) {
        std::size_t changed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double yi = m.labels_pm[i];
            const double ri = E[i] * yi;
            if (!((ri < -tol && m.alphas[i] < C) || (ri > tol && m.alphas[i] > 0.0))) continue;

            // second choice: largest |E_i - E_j|, lowest index on ties
            std::size_t j = n;
            double best = -1.0;
            for (std::size_t cand = 0; cand < n; ++cand) {
                if (cand == i) continue;
                double gap = std::abs(E[i] - E[cand]);
                if (gap > best) {
                    best = gap;
                    j = cand;
                }
            }
            if (j == n) continue;
            const double yj = m.labels_pm[j];
            const double ai_old = m.alphas[i], aj_old = m.alphas[j];

            double L, H;
            if (yi != yj) {
                L = std::max(0.0, aj_old - ai_old);
                H = std::min(C, C + aj_old - ai_old);
            } else {
                L = std::max(0.0, ai_old + aj_old - C);
                H = std::min(C, ai_old + aj_old);
            }
            if (L >= H) continue;
            const double eta = 2.0 * K[i][j] - K[i][i] - K[j][j];
            if (eta >= 0.0) continue;

            double aj = aj_old - yj * (E[i] - E[j]) / eta;
            aj = std::clamp(aj, L, H);
            if (std::abs(aj - aj_old) < 1e-8) continue;
            const double ai = ai_old + yi * yj * (aj_old - aj);

            const double b1 = m.bias - E[i] - yi * (ai - ai_old) * K[i][i] -
                              yj * (aj - aj_old) * K[i][j];
            const double b2 = m.bias - E[j] - yi * (ai - ai_old) * K[i][j] -
                              yj * (aj - aj_old) * K[j][j];
            double new_b;
            if (ai > 0.0 && ai < C)
                new_b = b1;
            else if (aj > 0.0 && aj < C)
                new_b = b2;
            else
                new_b = 0.5 * (b1 + b2);

            const double di = yi * (ai - ai_old), dj = yj * (aj - aj_old), db = new_b - m.bias;
            for (std::size_t t = 0; t < n; ++t) E[t] += di * K[i][t] + dj * K[j][t] + db;
            m.alphas[i] = ai;
            m.alphas[j] = aj;
            m.bias = new_b;
            ++changed;
        }
        passes = changed == 0 ? passes + 1 : 0;
    }
    return m;
}

double gaussian_svm_decision(const GaussianSvmModel& m, const std::vector<double>& x) {
    double f = m.bias;
    for (std::size_t i = 0; i < m.support_x.size(); ++i) {
        if (m.alphas[i] == 0.0) continue;
        f += m.alphas[i] * m.labels_pm[i] * rbf(m.support_x[i], x, m.gamma);
    }
    return f;
}

}  // namespace vitalsign
