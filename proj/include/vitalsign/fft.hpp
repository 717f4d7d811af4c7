#pragma once

#include <complex>
#include <vector>

namespace vitalsign {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);

// Forward DFT of a real sequence of arbitrary length (Bluestein chirp-z for
// non-power-of-two sizes): X[k] = sum_n x[n] * exp(-i 2 pi k n / N).
std::vector<std::complex<double>> dft_real(const std::vector<double>& x);

}  // namespace vitalsign
