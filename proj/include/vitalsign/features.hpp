#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "vitalsign/preprocess.hpp"

namespace vitalsign {

using Matrix = std::vector<std::vector<double>>;

inline constexpr std::size_t kFeatureCount = 12;

// Column order follows the published table of descriptive statistics.
enum FeatureIndex : std::size_t {
    kFeatMax = 0,
    kFeatMin,
    kFeatMean,
    kFeatMedian,
    kFeatMode,
    kFeatStd,
    kFeatVariance,
    kFeatRange,
    kFeatKurtosis,
    kFeatSkewness,
    kFeatAveragedPower,
    kFeatEnergySpectralDensity,
};

using FeatureVector = std::array<double, kFeatureCount>;

const std::array<std::string, kFeatureCount>& feature_names();

// Mean of the squared samples over the whole record.
double averaged_power(const Signal& s);

// Periodogram P[k] = (dT/N) |X[k]|^2 reduced to mean spectral power,
// sum_k P[k] / (N dT). Parseval ties this to averaged_power.
double energy_spectral_density(const Signal& s);

// All 12 features; requires length >= 4 so the moment features are meaningful.
FeatureVector extract_features(const Signal& s);

struct Normalizer {
    std::array<double, kFeatureCount> center{};
    std::array<double, kFeatureCount> scale{};  // always > 0
};

// Per-feature z-score parameters; zero-variance columns get scale 1.
Normalizer fit_normalizer(const Matrix& rows);
FeatureVector apply_normalizer(const Normalizer& nz, const FeatureVector& v);
Matrix apply_normalizer(const Normalizer& nz, const Matrix& rows);

}  // namespace vitalsign
