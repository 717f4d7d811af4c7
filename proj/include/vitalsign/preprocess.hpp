#pragma once

#include <vector>

#include "vitalsign/record.hpp"

namespace vitalsign {

// A clean, uniformly sampled series: no missing values, all finite.
struct Signal {
    std::vector<double> samples;  // beats/min
    double sampling_rate_hz = 1.0;

    std::size_t length() const { return samples.size(); }
};

struct SmoothingConfig {
    std::size_t window_len = 300;  // samples
};

struct PipelineConfig {
    std::size_t smoothing_window = 300;
    double target_hz = 1.0;
    bool first_hour_only = true;
};

// Drops the leading and trailing maximal runs made up of zeros or missing
// values only; interior zeros stay.
RawRecord truncate_tails(const RawRecord& r);

// Replaces every missing sample with the nearest preceding present value.
RawRecord forward_fill(const RawRecord& r);

// Trailing moving average: mean over the last window_len samples, expanding
// to the available prefix while t < window_len. Length and rate unchanged.
Signal moving_average(const Signal& s, const SmoothingConfig& cfg);

// Polyphase FIR resampling to target_hz. The rate ratio must be expressible
// as L/M with L, M <= 1000; the filter is a Kaiser-windowed sinc, linear
// phase, with group delay compensated so the output stays time-aligned.
Signal resample(const Signal& s, double target_hz);

// Finds L/M for the given ratio. Used by resample; exposed for tests.
void rational_ratio(double ratio, int& upsample, int& decimate);

// Kaiser-windowed lowpass used for the anti-aliasing stage.
std::vector<double> design_lowpass(int upsample, int decimate);

Signal clip_first_hour(const Signal& s);

Signal preprocess_pipeline(const RawRecord& r, const PipelineConfig& cfg);

}  // namespace vitalsign
