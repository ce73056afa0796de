#include "eegsp/fft.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace eegsp {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 transform. Twiddles are built per stage with
// std::polar, which keeps them accurate to ~1 ulp.
void fft_pow2(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cdouble> twiddle;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const double ang = (inverse ? 2.0 : -2.0) * kPi / double(len);
    twiddle.resize(half);
    for (std::size_t j = 0; j < half; ++j) twiddle[j] = std::polar(1.0, ang * double(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cdouble u = a[i + j];
        const cdouble v = a[i + j + half] * twiddle[j];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / double(n);
    for (auto& v : a) v *= scale;
  }
}

// Bluestein: X[k] = conj(c[k]) * (x.c* (*) c)[k] with chirp c[j] = e^(i*pi*j^2/n).
// j^2 is reduced mod 2n before the angle so the chirp stays exact for large n.
std::vector<cdouble> bluestein(const std::vector<cdouble>& x) {
  const std::size_t n = x.size();
  const std::size_t m = next_pow2(2 * n - 1);

  std::vector<cdouble> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t j2 = (std::uint64_t(j) * j) % (2 * n);
    chirp[j] = std::polar(1.0, kPi * double(j2) / double(n));
  }

  std::vector<cdouble> a(m, cdouble{});
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * std::conj(chirp[j]);

  std::vector<cdouble> b(m, cdouble{});
  b[0] = chirp[0];
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = chirp[j];

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, true);

  std::vector<cdouble> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(chirp[k]) * a[k];
  return out;
}

}  // namespace

std::vector<cdouble> fft(const std::vector<cdouble>& x) {
  if (x.empty()) throw std::invalid_argument("fft: empty input");
  if (x.size() == 1) return x;
  if (is_pow2(x.size())) {
    std::vector<cdouble> a = x;
    fft_pow2(a, false);
    return a;
  }
  return bluestein(x);
}

std::vector<cdouble> fft(const std::vector<double>& x) {
  std::vector<cdouble> cx(x.begin(), x.end());
  return fft(cx);
}

std::vector<cdouble> ifft(const std::vector<cdouble>& x) {
  if (x.empty()) throw std::invalid_argument("ifft: empty input");
  std::vector<cdouble> cx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cx[i] = std::conj(x[i]);
  std::vector<cdouble> y = fft(cx);
  const double scale = 1.0 / double(x.size());
  for (auto& v : y) v = std::conj(v) * scale;
  return y;
}

std::vector<cdouble> dft_naive(const std::vector<cdouble>& x) {
  if (x.empty()) throw std::invalid_argument("dft_naive: empty input");
  const std::size_t n = x.size();
  std::vector<cdouble> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cdouble acc{};
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t r = (std::uint64_t(k) * j) % n;
      acc += x[j] * std::polar(1.0, -2.0 * kPi * double(r) / double(n));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<cdouble> dft_naive(const std::vector<double>& x) {
  std::vector<cdouble> cx(x.begin(), x.end());
  return dft_naive(cx);
}

}  // namespace eegsp
