#pragma once

#include <complex>
#include <vector>

namespace eegsp {

using cdouble = std::complex<double>;

// Forward discrete Fourier transform, X[k] = sum_n x[n] e^(-2*pi*i*k*n/N),
// for any length N >= 1. Power-of-two lengths run radix-2 Cooley-Tukey;
// everything else goes through Bluestein's chirp-z algorithm, so awkward
// lengths (4097 = 17 * 241) cost O(N log N) without zero-padding the input.
std::vector<cdouble> fft(const std::vector<cdouble>& x);

std::vector<cdouble> fft(const std::vector<double>& x);

// Inverse transform with 1/N normalization: ifft(fft(x)) == x.
std::vector<cdouble> ifft(const std::vector<cdouble>& x);

// Direct O(N^2) evaluation of the defining sum. Reference oracle for fft();
// products k*n are reduced mod N before the complex exponential so the
// twiddle angles stay accurate at large N.
std::vector<cdouble> dft_naive(const std::vector<cdouble>& x);

std::vector<cdouble> dft_naive(const std::vector<double>& x);

}  // namespace eegsp
