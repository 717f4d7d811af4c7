#include "vitalsign/linear.hpp"

#include <cmath>

#include "vitalsign/error.hpp"

namespace vitalsign {

double linear_margin(const LinearScorer& m, const std::vector<double>& x) {
    double z = m.bias;
    for (std::size_t j = 0; j < m.weights.size(); ++j) z += m.weights[j] * x[j];
    return z;
}

namespace {

// Cholesky solve of A x = rhs for a symmetric positive definite A (row-major).
bool cholesky_solve(std::vector<double> a, std::size_t d, std::vector<double> rhs,
                    std::vector<double>& out) {
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i * d + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * d + k] * a[j * d + k];
            if (i == j) {
                if (s <= 0.0 || !std::isfinite(s)) return false;
                a[i * d + i] = std::sqrt(s);
            } else {
                a[i * d + j] = s / a[j * d + j];
            }
        }
    }
    // forward then back substitution
    for (std::size_t i = 0; i < d; ++i) {
        double s = rhs[i];
        for (std::size_t k = 0; k < i; ++k) s -= a[i * d + k] * rhs[k];
        rhs[i] = s / a[i * d + i];
    }
    out.assign(d, 0.0);
    for (std::size_t ii = d; ii-- > 0;) {
        double s = rhs[ii];
        for (std::size_t k = ii + 1; k < d; ++k) s -= a[k * d + ii] * out[k];
        out[ii] = s / a[ii * d + ii];
    }
    return true;
}

}  // namespace

LinearScorer train_lda(const Matrix& X, const std::vector<int>& y) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "lda needs rows");
    const std::size_t d = X[0].size();
    std::vector<double> mu0(d, 0.0), mu1(d, 0.0);
    std::size_t n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        auto& mu = y[i] == 1 ? mu1 : mu0;
        (y[i] == 1 ? n1 : n0) += 1;
        for (std::size_t j = 0; j < d; ++j) mu[j] += X[i][j];
    }
    if (n0 < 2 || n1 < 2) raise(ErrorCode::TooFewRows, "lda needs >= 2 rows per class");
    for (std::size_t j = 0; j < d; ++j) {
        mu0[j] /= static_cast<double>(n0);
        mu1[j] /= static_cast<double>(n1);
    }

    std::vector<double> cov(d * d, 0.0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto& mu = y[i] == 1 ? mu1 : mu0;
        for (std::size_t a = 0; a < d; ++a) {
            double da = X[i][a] - mu[a];
            for (std::size_t b = 0; b <= a; ++b) cov[a * d + b] += da * (X[i][b] - mu[b]);
        }
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            cov[a * d + b] /= static_cast<double>(n0 + n1 - 2);
            cov[b * d + a] = cov[a * d + b];
        }

    std::vector<double> diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = mu1[j] - mu0[j];

    std::vector<double> w, s0, s1;
    bool ok = cholesky_solve(cov, d, diff, w);
    if (!ok) {
        double trace = 0.0;
        for (std::size_t j = 0; j < d; ++j) trace += cov[j * d + j];
        double ridge = 1e-6 * trace / static_cast<double>(d);
        if (!(ridge > 0.0)) ridge = 1e-12;
        for (std::size_t j = 0; j < d; ++j) cov[j * d + j] += ridge;
        ok = cholesky_solve(cov, d, diff, w);
        if (!ok) raise(ErrorCode::SingularCovariance, "pooled covariance is singular even with ridge");
    }
    cholesky_solve(cov, d, mu0, s0);
    cholesky_solve(cov, d, mu1, s1);

    double q1 = 0.0, q0 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        q1 += mu1[j] * s1[j];
        q0 += mu0[j] * s0[j];
    }
    LinearScorer m;
    m.weights = w;
    m.bias = -0.5 * q1 + 0.5 * q0 +
             std::log(static_cast<double>(n1) / static_cast<double>(n0));
    return m;
}

double logistic_loss(const Matrix& X, const std::vector<int>& y, double l2,
                     const std::vector<double>& w, double b, std::vector<double>* grad) {
    const std::size_t n = X.size(), d = w.size();
    double loss = 0.0;
    if (grad) grad->assign(d + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double u = b;
        for (std::size_t j = 0; j < d; ++j) u += w[j] * X[i][j];
        // log(1 + exp(u)) - y u, computed without overflow
        loss += (u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u))) -
                (y[i] == 1 ? u : 0.0);
        if (grad) {
            double r = sigmoid(u) - (y[i] == 1 ? 1.0 : 0.0);
            for (std::size_t j = 0; j < d; ++j) (*grad)[j] += r * X[i][j];
            (*grad)[d] += r;
        }
    }
    loss /= static_cast<double>(n);
    for (std::size_t j = 0; j < d; ++j) loss += 0.5 * l2 * w[j] * w[j];
    if (grad) {
        for (double& g : *grad) g /= static_cast<double>(n);
        for (std::size_t j = 0; j < d; ++j) (*grad)[j] += l2 * w[j];
    }
    return loss;
}

LogisticResult train_logistic(const Matrix& X, const std::vector<int>& y,
                              const LogisticParams& params) {
    if (X.empty() || X.size() != y.size()) raise(ErrorCode::EmptyData, "logistic needs rows");
    const std::size_t d = X[0].size();
    LogisticResult res;
    std::vector<double> w(d, 0.0);
    double b = 0.0;

    std::vector<double> grad;
    double loss = logistic_loss(X, y, params.l2, w, b, &grad);
    for (res.iterations = 0; res.iterations < params.max_iter; ++res.iterations) {
        double gnorm = 0.0;
        for (double g : grad) gnorm += g * g;
        gnorm = std::sqrt(gnorm);
        res.grad_norm = gnorm;
        if (gnorm < params.tol) {
            res.converged = true;
            break;
        }
        // backtracking line search along -grad
        double step = 1.0;
        const double slope = gnorm * gnorm;
        std::vector<double> wt(d);
        double bt = 0.0;
        for (int tries = 0; tries < 60; ++tries) {
            for (std::size_t j = 0; j < d; ++j) wt[j] = w[j] - step * grad[j];
            bt = b - step * grad[d];
            double lt = logistic_loss(X, y, params.l2, wt, bt, nullptr);
            if (lt <= loss - 1e-4 * step * slope) break;
            step *= 0.5;
        }
        w = wt;
        b = bt;
        loss = logistic_loss(X, y, params.l2, w, b, &grad);
    }
    res.scorer.weights = std::move(w);
    res.scorer.bias = b;
    return res;
}

}  // namespace vitalsign
