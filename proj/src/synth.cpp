#include "vitalsign/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vitalsign/parallel.hpp"
#include "vitalsign/rng.hpp"

namespace vitalsign {

namespace {

constexpr double kMinBpm = 20.0;
constexpr double kMaxBpm = 250.0;

void check_prob(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::InvalidDistribution, std::string(name) + " must be in [0,1]");
}

void check_params(const ClassParams& p) {
    check_prob(p.spike_prob, "spike_prob");
    check_prob(p.missing_run_prob, "missing_run_prob");
    if (!(p.ar_coefficient >= 0.0 && p.ar_coefficient < 1.0))
        raise(ErrorCode::InvalidDistribution, "ar_coefficient must be in [0,1)");
    if (!(p.baseline_sd >= 0.0 && p.noise_sd >= 0.0 && p.spike_scale >= 0.0))
        raise(ErrorCode::InvalidDistribution, "scales must be nonnegative");
}

RawRecord generate_patient(const SynthConfig& cfg, const ClassParams& p, std::size_t index) {
    Rng rng(mix_seed(cfg.seed, index));
    const double rate = cfg.rates_hz[rng.below(cfg.rates_hz.size())];
    const auto n = static_cast<std::size_t>(std::llround(cfg.duration_s * rate));

    RawRecord r;
    r.sampling_rate_hz = rate;
    r.samples.resize(std::max<std::size_t>(n, 1));

    const double baseline = rng.normal(p.baseline_mean, p.baseline_sd);
    const double a = p.ar_coefficient;
    double drift = rng.normal(0.0, p.noise_sd / std::sqrt(1.0 - a * a));

    std::size_t burst_left = 0, burst_len = 0;
    double burst_amp = 0.0;
    for (std::size_t t = 0; t < r.samples.size(); ++t) {
        if (burst_left == 0 && rng.uniform() < p.spike_prob) {
            burst_len = rng.uniform_int(5, 20);
            burst_left = burst_len;
            burst_amp = rng.half_normal(p.spike_scale);
        }
        double spike = 0.0;
        if (burst_left > 0) {
            std::size_t k = burst_len - burst_left;
            spike = burst_amp * std::sin(std::numbers::pi * static_cast<double>(k + 1) /
                                         static_cast<double>(burst_len + 1));
            --burst_left;
        }
        drift = a * drift + rng.normal(0.0, p.noise_sd);
        r.samples[t] = std::clamp(baseline + drift + spike, kMinBpm, kMaxBpm);
    }

    // monitor dropouts: contiguous missing runs, geometric length (mean 10)
    std::size_t miss_left = 0;
    for (std::size_t t = 0; t < r.samples.size(); ++t) {
        if (miss_left == 0 && rng.uniform() < p.missing_run_prob)
            miss_left = rng.geometric_len(10.0);
        if (miss_left > 0) {
            r.samples[t] = missing_value();
            --miss_left;
        }
    }
    return r;
}

std::string patient_name(std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "pt%06zu", index);
    return buf;
}

}  // namespace

void validate(const SynthConfig& cfg) {
    if (cfg.rates_hz.empty()) raise(ErrorCode::InvalidDistribution, "rates_hz must be nonempty");
    for (double r : cfg.rates_hz)
        if (!(r > 0.0)) raise(ErrorCode::NonPositiveRate, "rates_hz entries must be > 0");
    if (!(cfg.duration_s > 0.0)) raise(ErrorCode::InvalidDistribution, "duration_s must be > 0");
    check_params(cfg.survived);
    check_params(cfg.passed);
}

SynthConfig default_config() {
    SynthConfig cfg;
    cfg.n_survived = 2614;
    cfg.n_passed = 365;
    cfg.seed = 7;
    cfg.rates_hz = {1.0, 0.5, 0.17};
    cfg.duration_s = 3600.0;

    cfg.survived.baseline_mean = 81.92;
    cfg.survived.baseline_sd = 7.0;
    cfg.survived.ar_coefficient = 0.997;
    cfg.survived.noise_sd = 0.05;
    cfg.survived.spike_prob = 0.0006;
    cfg.survived.spike_scale = 10.0;
    cfg.survived.missing_run_prob = 0.002;

    cfg.passed.baseline_mean = 88.46;
    cfg.passed.baseline_sd = 2.2;
    cfg.passed.ar_coefficient = 0.997;
    cfg.passed.noise_sd = 0.13;
    cfg.passed.spike_prob = 0.003;
    cfg.passed.spike_scale = 18.0;
    cfg.passed.missing_run_prob = 0.002;
    return cfg;
}

SynthCohort generate_cohort(const SynthConfig& cfg, int jobs) {
    validate(cfg);
    const std::size_t total = cfg.n_survived + cfg.n_passed;
    SynthCohort out;
    out.records.resize(total);
    out.manifest.entries.resize(total);

    parallel_for(total, jobs, [&](std::size_t i) {
        const bool passed = i >= cfg.n_survived;
        RawRecord r = generate_patient(cfg, passed ? cfg.passed : cfg.survived, i);
        r.patient_id = patient_name(i);
        ManifestEntry e;
        e.patient_id = r.patient_id;
        e.record_path = r.patient_id + ".hrw";
        e.care_unit = CareUnit::CCU;
        e.outcome = passed ? Outcome::PassedAway : Outcome::Survived;
        out.records[i] = std::move(r);
        out.manifest.entries[i] = std::move(e);
    });
    return out;
}

}  // namespace vitalsign
