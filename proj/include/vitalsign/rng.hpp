#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace vitalsign {

// splitmix64 step; also used to derive independent per-item seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL);
    splitmix64(s);
    return splitmix64(s);
}

// Deterministic generator with a fixed cross-platform sequence. The standard
// <random> distributions are implementation-defined, so all sampling lives here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // decorrelate trivially different seeds
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // modulo bias is irrelevant at the scales used here
        return n == 0 ? 0 : next_u64() % n;
    }

    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {  // inclusive bounds
        return lo + below(hi - lo + 1);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double half_normal(double scale) { return std::abs(normal()) * scale; }

    // geometric run length >= 1 with the given mean
    std::uint64_t geometric_len(double mean) {
        if (mean <= 1.0) return 1;
        double p = 1.0 / mean;
        double u = uniform();
        while (u <= 1e-300) u = uniform();
        double len = std::ceil(std::log(u) / std::log1p(-p));
        if (len < 1.0) return 1;
        if (len > 1e6) return 1000000;
        return static_cast<std::uint64_t>(len);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace vitalsign
