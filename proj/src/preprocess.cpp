#include "vitalsign/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vitalsign {

namespace {

bool dead_sample(double v) { return is_missing(v) || v == 0.0; }

double kaiser_i0(double x) {
    // series expansion of the zeroth-order modified Bessel function
    double sum = 1.0, term = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= (x / (2.0 * k)) * (x / (2.0 * k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace

RawRecord truncate_tails(const RawRecord& r) {
    std::size_t n = r.samples.size();
    std::size_t first = 0;
    while (first < n && dead_sample(r.samples[first])) ++first;
    if (first == n) raise(ErrorCode::AllInvalid, "record is all zeros or missing");
    std::size_t last = n - 1;
    while (dead_sample(r.samples[last])) --last;

    RawRecord out = r;
    out.samples.assign(r.samples.begin() + static_cast<std::ptrdiff_t>(first),
                       r.samples.begin() + static_cast<std::ptrdiff_t>(last + 1));
    out.start_offset_s = r.start_offset_s + static_cast<double>(first) / r.sampling_rate_hz;
    return out;
}

RawRecord forward_fill(const RawRecord& r) {
    if (r.samples.empty() || is_missing(r.samples.front()))
        raise(ErrorCode::LeadingMissing, "first sample is missing, cannot forward-fill");
    RawRecord out = r;
    double prev = out.samples.front();
    for (double& v : out.samples) {
        if (is_missing(v))
            v = prev;
        else
            prev = v;
    }
    return out;
}

Signal moving_average(const Signal& s, const SmoothingConfig& cfg) {
    std::size_t n = s.samples.size();
    std::size_t w = std::max<std::size_t>(1, cfg.window_len);
    Signal out;
    out.sampling_rate_hz = s.sampling_rate_hz;
    out.samples.resize(n);

    double sum = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        sum += s.samples[t];
        if (t >= w) sum -= s.samples[t - w];
        std::size_t width = std::min(t + 1, w);
        // refresh the running sum periodically to keep rounding drift negligible
        if ((t & 0xfff) == 0xfff) {
            sum = 0.0;
            for (std::size_t k = t + 1 - width; k <= t; ++k) sum += s.samples[k];
        }
        out.samples[t] = sum / static_cast<double>(width);
    }
    return out;
}

void rational_ratio(double ratio, int& upsample, int& decimate) {
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        raise(ErrorCode::IrrationalRatio, "rate ratio must be positive and finite");
    for (int m = 1; m <= 1000; ++m) {
        double l_real = ratio * m;
        int l = static_cast<int>(std::llround(l_real));
        if (l < 1 || l > 1000) continue;
        if (std::abs(static_cast<double>(l) / m - ratio) <= 1e-9 * std::max(1.0, ratio)) {
            upsample = l;
            decimate = m;
            return;
        }
    }
    raise(ErrorCode::IrrationalRatio, "no L/M approximation with L, M <= 1000");
}

std::vector<double> design_lowpass(int upsample, int decimate) {
    const int big = std::max(upsample, decimate);
    const int taps = 8 * big + 1;
    const int mid = (taps - 1) / 2;
    const double beta = 5.0;
    const double cutoff = 0.9 * std::numbers::pi / big;

    std::vector<double> h(static_cast<std::size_t>(taps));
    const double denom = kaiser_i0(beta);
    for (int k = 0; k < taps; ++k) {
        double t = k - mid;
        double sinc = t == 0.0 ? cutoff / std::numbers::pi
                               : std::sin(cutoff * t) / (std::numbers::pi * t);
        double x = 2.0 * k / (taps - 1) - 1.0;
        double window = kaiser_i0(beta * std::sqrt(std::max(0.0, 1.0 - x * x))) / denom;
        h[static_cast<std::size_t>(k)] = sinc * window;
    }
    // unity DC gain per polyphase branch, so constants pass through exactly
    for (int phase = 0; phase < upsample; ++phase) {
        double sum = 0.0;
        for (int k = phase; k < taps; k += upsample) sum += h[static_cast<std::size_t>(k)];
        if (sum != 0.0)
            for (int k = phase; k < taps; k += upsample) h[static_cast<std::size_t>(k)] /= sum;
    }
    return h;
}

Signal resample(const Signal& s, double target_hz) {
    if (!(target_hz > 0.0)) raise(ErrorCode::IrrationalRatio, "target rate must be > 0");
    int up = 1, down = 1;
    rational_ratio(target_hz / s.sampling_rate_hz, up, down);

    Signal out;
    out.sampling_rate_hz = target_hz;
    if (up == down) {
        out.samples = s.samples;
        return out;
    }

    const std::vector<double> h = design_lowpass(up, down);
    const int taps = static_cast<int>(h.size());
    const int mid = (taps - 1) / 2;
    const std::int64_t n = static_cast<std::int64_t>(s.samples.size());
    const std::int64_t out_len = (n * up + down - 1) / down;

    out.samples.resize(static_cast<std::size_t>(out_len));
    for (std::int64_t j = 0; j < out_len; ++j) {
        // upsampled-grid position of this output sample, shifted by the group delay
        std::int64_t q = j * down + mid;
        double acc = 0.0;
        for (std::int64_t k = q % up; k < taps; k += up) {
            std::int64_t i = (q - k) / up;
            // replicate edges; zero padding would drag the boundary toward 0
            if (i < 0) i = 0;
            if (i >= n) i = n - 1;
            acc += h[static_cast<std::size_t>(k)] * s.samples[static_cast<std::size_t>(i)];
        }
        out.samples[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

Signal clip_first_hour(const Signal& s) {
    auto keep = static_cast<std::size_t>(std::floor(3600.0 * s.sampling_rate_hz + 1e-9));
    Signal out;
    out.sampling_rate_hz = s.sampling_rate_hz;
    if (s.samples.size() <= keep) {
        out.samples = s.samples;
    } else {
        out.samples.assign(s.samples.begin(), s.samples.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    return out;
}

Signal preprocess_pipeline(const RawRecord& r, const PipelineConfig& cfg) {
    RawRecord filled = forward_fill(truncate_tails(r));
    Signal s;
    s.samples = filled.samples;
    s.sampling_rate_hz = filled.sampling_rate_hz;
    s = moving_average(s, SmoothingConfig{cfg.smoothing_window});
    s = resample(s, cfg.target_hz);
    if (cfg.first_hour_only) s = clip_first_hour(s);
    return s;
}

}  // namespace vitalsign
