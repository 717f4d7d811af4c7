#include "vitalsign/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace vitalsign {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// exp(-i pi n^2 / N) evaluated with n^2 reduced mod 2N to keep the angle small
std::complex<double> chirp(std::int64_t n, std::int64_t N) {
    std::int64_t m = (n * n) % (2 * N);
    double angle = -std::numbers::pi * static_cast<double>(m) / static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double angle = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        std::complex<double> wl(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        for (auto& v : a) v /= static_cast<double>(n);
    }
}

std::vector<std::complex<double>> dft_real(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    if (n == 0) return out;
    if (n == 1) {
        out[0] = x[0];
        return out;
    }

    if (is_pow2(n)) {
        for (std::size_t i = 0; i < n; ++i) out[i] = x[i];
        fft_radix2(out, false);
        return out;
    }

    const std::size_t padded = next_pow2(2 * n - 1);
    const auto N = static_cast<std::int64_t>(n);
    std::vector<std::complex<double>> a(padded), b(padded);
    for (std::int64_t i = 0; i < N; ++i) {
        std::complex<double> c = chirp(i, N);
        a[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] * c;
        std::complex<double> cc = std::conj(c);
        b[static_cast<std::size_t>(i)] = cc;
        if (i != 0) b[padded - static_cast<std::size_t>(i)] = cc;
    }
    fft_radix2(a, false);
    fft_radix2(b, false);
    for (std::size_t i = 0; i < padded; ++i) a[i] *= b[i];
    fft_radix2(a, true);
    for (std::int64_t k = 0; k < N; ++k)
        out[static_cast<std::size_t>(k)] = chirp(k, N) * a[static_cast<std::size_t>(k)];
    return out;
}

}  // namespace vitalsign
