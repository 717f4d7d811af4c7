#include "vitalsign/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vitalsign/fft.hpp"

namespace vitalsign {

const std::array<std::string, kFeatureCount>& feature_names() {
    static const std::array<std::string, kFeatureCount> names = {
        "max",      "min",      "mean",          "median",
        "mode",     "std",      "variance",      "range",
        "kurtosis", "skewness", "averaged_power", "energy_spectral_density"};
    return names;
}

double averaged_power(const Signal& s) {
    double sum = 0.0;
    for (double v : s.samples) sum += v * v;
    return sum / static_cast<double>(s.samples.size());
}

double energy_spectral_density(const Signal& s) {
    const auto spectrum = dft_real(s.samples);
    const double n = static_cast<double>(s.samples.size());
    const double dt = 1.0 / s.sampling_rate_hz;
    double total = 0.0;
    for (const auto& x : spectrum) total += (dt / n) * std::norm(x);
    return total / (n * dt);
}

FeatureVector extract_features(const Signal& s) {
    const std::size_t n = s.samples.size();
    if (n < 4) raise(ErrorCode::TooShort, "feature extraction needs at least 4 samples");

    FeatureVector f{};
    double mx = s.samples[0], mn = s.samples[0], sum = 0.0;
    for (double v : s.samples) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
        sum += v;
    }
    const double mean = sum / static_cast<double>(n);

    std::vector<double> sorted = s.samples;
    std::sort(sorted.begin(), sorted.end());
    const double median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    // Mode over values rounded to whole beats/min, count ties to the smallest.
    std::map<long long, std::size_t> counts;
    for (double v : s.samples) ++counts[std::llround(v)];
    long long mode_bpm = counts.begin()->first;
    std::size_t best = counts.begin()->second;
    for (const auto& [value, count] : counts) {
        if (count > best) {
            best = count;
            mode_bpm = value;
        }
    }

    double m2 = 0.0, m3 = 0.0, m4 = 0.0, ss = 0.0;
    for (double v : s.samples) {
        double d = v - mean;
        double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
        ss += d2;
    }
    const double variance = ss / static_cast<double>(n - 1);
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    const double skew = m2 == 0.0 ? 0.0 : m3 / std::pow(m2, 1.5);
    const double kurt = m2 == 0.0 ? 0.0 : m4 / (m2 * m2);

    f[kFeatMax] = mx;
    f[kFeatMin] = mn;
    f[kFeatMean] = mean;
    f[kFeatMedian] = median;
    f[kFeatMode] = static_cast<double>(mode_bpm);
    f[kFeatStd] = std::sqrt(variance);
    f[kFeatVariance] = variance;
    f[kFeatRange] = mx - mn;
    f[kFeatKurtosis] = kurt;
    f[kFeatSkewness] = skew;
    f[kFeatAveragedPower] = averaged_power(s);
    f[kFeatEnergySpectralDensity] = energy_spectral_density(s);
    return f;
}

Normalizer fit_normalizer(const Matrix& rows) {
    if (rows.size() < 2) raise(ErrorCode::TooFewRows, "normalizer needs at least 2 rows");
    const double n = static_cast<double>(rows.size());
    Normalizer nz;
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        double sum = 0.0;
        for (const auto& row : rows) sum += row[j];
        const double mean = sum / n;
        double ss = 0.0;
        for (const auto& row : rows) {
            double d = row[j] - mean;
            ss += d * d;
        }
        double sd = std::sqrt(ss / (n - 1.0));
        nz.center[j] = mean;
        nz.scale[j] = sd > 0.0 && std::isfinite(sd) ? sd : 1.0;
    }
    return nz;
}

FeatureVector apply_normalizer(const Normalizer& nz, const FeatureVector& v) {
    FeatureVector out;
    for (std::size_t j = 0; j < kFeatureCount; ++j) out[j] = (v[j] - nz.center[j]) / nz.scale[j];
    return out;
}

Matrix apply_normalizer(const Normalizer& nz, const Matrix& rows) {
    Matrix out(rows.size(), std::vector<double>(kFeatureCount));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < kFeatureCount; ++j)
            out[i][j] = (rows[i][j] - nz.center[j]) / nz.scale[j];
    return out;
}

}  // namespace vitalsign
