#include "vitalsign/imbalance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "vitalsign/error.hpp"
#include "vitalsign/rng.hpp"

namespace vitalsign {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double d = a[j] - b[j];
        s += d * d;
    }
    return s;
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    return std::sqrt(sq_dist(a, b));
}

std::vector<double> centroid(const Matrix& X, const std::vector<std::size_t>& members) {
    std::vector<double> c(X[0].size(), 0.0);
    for (std::size_t i : members)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += X[i][j];
    for (double& v : c) v /= static_cast<double>(members.size());
    return c;
}

double quantile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    if (values.size() == 1) return values[0];
    double pos = q * static_cast<double>(values.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
}

// mean distance to the k nearest rows of `pool`
double mean_knn_dist(const std::vector<double>& x, const Matrix& X,
                     const std::vector<std::size_t>& pool, std::size_t k) {
    std::vector<double> d;
    d.reserve(pool.size());
    for (std::size_t i : pool) d.push_back(dist(x, X[i]));
    k = std::min(k, d.size());
    std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
    double sum = std::accumulate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
    return sum / static_cast<double>(k);
}

struct Clustering {
    std::vector<std::vector<std::size_t>> clusters;  // indices into the minority list
};

// Agglomerative average linkage over the minority rows. Merging stops at the
// quantile cut; a merge is vetoed when the midpoint between the two cluster
// centroids is closer to a majority row than to any minority row.
Clustering cluster_minority(const Matrix& X, const std::vector<std::size_t>& minority,
                            const std::vector<std::size_t>& majority, double q) {
    const std::size_t m = minority.size();
    std::vector<std::vector<double>> pair_dist(m, std::vector<double>(m, 0.0));
    std::vector<double> all_pairs;
    all_pairs.reserve(m * (m - 1) / 2);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            double d = dist(X[minority[a]], X[minority[b]]);
            pair_dist[a][b] = pair_dist[b][a] = d;
            all_pairs.push_back(d);
        }
    const double cut = quantile(all_pairs, q);

    Clustering cl;
    cl.clusters.reserve(m);
    for (std::size_t i = 0; i < m; ++i) cl.clusters.push_back({i});

    auto linkage = [&](const std::vector<std::size_t>& A, const std::vector<std::size_t>& B) {
        double s = 0.0;
        for (std::size_t a : A)
            for (std::size_t b : B) s += pair_dist[a][b];
        return s / (static_cast<double>(A.size()) * static_cast<double>(B.size()));
    };

    auto merge_allowed = [&](const std::vector<std::size_t>& A, const std::vector<std::size_t>& B) {
        std::vector<std::size_t> ga, gb;
        for (std::size_t i : A) ga.push_back(minority[i]);
        for (std::size_t i : B) gb.push_back(minority[i]);
        std::vector<double> ca = centroid(X, ga), cb = centroid(X, gb);
        std::vector<double> mid(ca.size());
        for (std::size_t j = 0; j < mid.size(); ++j) mid[j] = 0.5 * (ca[j] + cb[j]);
        double best = std::numeric_limits<double>::infinity();
        bool best_is_majority = false;
        for (std::size_t i : minority) {
            double d = sq_dist(mid, X[i]);
            if (d < best) {
                best = d;
                best_is_majority = false;
            }
        }
        for (std::size_t i : majority) {
            double d = sq_dist(mid, X[i]);
            if (d < best) {
                best = d;
                best_is_majority = true;
            }
        }
        return !best_is_majority;
    };

    while (cl.clusters.size() > 1) {
        // candidate pairs by linkage, ties to the lowest index pair
        std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
        for (std::size_t a = 0; a < cl.clusters.size(); ++a)
            for (std::size_t b = a + 1; b < cl.clusters.size(); ++b) {
                double d = linkage(cl.clusters[a], cl.clusters[b]);
                if (d <= cut) candidates.emplace_back(d, a, b);
            }
        if (candidates.empty()) break;
        std::sort(candidates.begin(), candidates.end());
        bool merged = false;
        for (const auto& [d, a, b] : candidates) {
            if (!merge_allowed(cl.clusters[a], cl.clusters[b])) continue;
            auto& ca = cl.clusters[a];
            ca.insert(ca.end(), cl.clusters[b].begin(), cl.clusters[b].end());
            std::sort(ca.begin(), ca.end());
            cl.clusters.erase(cl.clusters.begin() + static_cast<std::ptrdiff_t>(b));
            merged = true;
            break;
        }
        if (!merged) break;
    }
    return cl;
}

}  // namespace

BalancedSet oversample(const Matrix& X, const std::vector<int>& y, const OversampleConfig& cfg) {
    if (X.size() != y.size() || X.empty()) raise(ErrorCode::EmptyData, "oversample needs rows");
    std::vector<std::size_t> ones, zeros;
    for (std::size_t i = 0; i < y.size(); ++i) (y[i] == 1 ? ones : zeros).push_back(i);
    if (ones.empty() || zeros.empty()) raise(ErrorCode::SingleClass, "need two classes to rebalance");

    const bool ones_minority = ones.size() <= zeros.size();
    const std::vector<std::size_t>& minority = ones_minority ? ones : zeros;
    const std::vector<std::size_t>& majority = ones_minority ? zeros : ones;
    const int minority_label = ones_minority ? 1 : 0;
    if (minority.size() < 2) raise(ErrorCode::DegenerateMinority, "minority class needs >= 2 rows");

    BalancedSet out;
    out.rows = X;
    out.labels = y;
    out.synthetic.assign(X.size(), false);

    const auto desired =
        static_cast<long long>(std::llround(cfg.target_ratio * static_cast<double>(majority.size())));
    const long long need = desired - static_cast<long long>(minority.size());

    Clustering cl = cluster_minority(X, minority, majority, cfg.linkage_threshold_quantile);

    // adaptive weights: clusters sitting closer to the majority get more synthetics
    std::vector<double> weights(cl.clusters.size(), 0.0);
    double wsum = 0.0;
    for (std::size_t c = 0; c < cl.clusters.size(); ++c) {
        double mean_d = 0.0;
        for (std::size_t i : cl.clusters[c])
            mean_d += mean_knn_dist(X[minority[i]], X, majority, cfg.k_majority);
        mean_d /= static_cast<double>(cl.clusters[c].size());
        weights[c] = 1.0 / std::max(mean_d, 1e-12);
        wsum += weights[c];
    }
    for (double& w : weights) w /= wsum;
    out.cluster_weights = weights;
    if (need <= 0) return out;

    // largest-remainder allocation of the synthetic budget
    std::vector<std::size_t> alloc(cl.clusters.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    long long assigned = 0;
    for (std::size_t c = 0; c < cl.clusters.size(); ++c) {
        double quota = weights[c] * static_cast<double>(need);
        alloc[c] = static_cast<std::size_t>(std::floor(quota));
        assigned += static_cast<long long>(alloc[c]);
        remainders.emplace_back(-(quota - std::floor(quota)), c);
    }
    std::sort(remainders.begin(), remainders.end());
    for (std::size_t r = 0; assigned < need; ++r, ++assigned) ++alloc[remainders[r % remainders.size()].second];

    // per-member intra-cluster neighbor lists, nearest first, ties to lower index
    Rng rng(cfg.seed);
    for (std::size_t c = 0; c < cl.clusters.size(); ++c) {
        const auto& members = cl.clusters[c];
        std::vector<std::vector<std::size_t>> neighbors(members.size());
        for (std::size_t a = 0; a < members.size(); ++a) {
            std::vector<std::pair<double, std::size_t>> order;
            for (std::size_t b = 0; b < members.size(); ++b) {
                if (a == b) continue;
                order.emplace_back(dist(X[minority[members[a]]], X[minority[members[b]]]), members[b]);
            }
            std::sort(order.begin(), order.end());
            std::size_t keep = std::min(cfg.k_intra, order.size());
            for (std::size_t k = 0; k < keep; ++k) neighbors[a].push_back(order[k].second);
        }
        for (std::size_t s = 0; s < alloc[c]; ++s) {
            std::size_t ai = rng.below(members.size());
            std::size_t gi = minority[members[ai]];
            std::size_t gj = gi;  // singleton cluster duplicates its only member
            if (!neighbors[ai].empty())
                gj = minority[neighbors[ai][rng.below(neighbors[ai].size())]];
            double u = rng.uniform();
            std::vector<double> row(X[gi].size());
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = X[gi][j] + u * (X[gj][j] - X[gi][j]);
            out.rows.push_back(std::move(row));
            out.labels.push_back(minority_label);
            out.synthetic.push_back(true);
            out.parents.emplace_back(gi, gj);
            ++out.n_synthetic;
        }
    }
    return out;
}

}  // namespace vitalsign
