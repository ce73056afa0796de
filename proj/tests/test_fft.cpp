#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "eegsp/fft.hpp"

using namespace eegsp;

namespace {

std::vector<double> random_signal(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> s(n);
  for (double& v : s) v = dist(rng);
  return s;
}

double max_abs(const std::vector<cdouble>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double max_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("fft matches the naive transform on every length up to 64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto x = random_signal(n, std::uint32_t(n));
    const auto fast = fft(x);
    const auto slow = dft_naive(x);
    const double scale = std::max(max_abs(slow), 1e-30);
    CHECK(max_diff(fast, slow) / scale <= 1e-9);
  }
}

TEST_CASE("fft matches the naive transform on a prime length") {
  const auto x = random_signal(241, 99);
  const auto fast = fft(x);
  const auto slow = dft_naive(x);
  CHECK(max_diff(fast, slow) / max_abs(slow) <= 1e-9);
}

TEST_CASE("fft of an impulse is flat") {
  std::vector<double> x(16, 0.0);
  x[0] = 1.0;
  for (const auto& bin : fft(x)) {
    CHECK(bin.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bin.imag() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fft of a constant concentrates in the DC bin") {
  const std::vector<double> x(32, 3.0);
  const auto spec = fft(x);
  CHECK(spec[0].real() == doctest::Approx(96.0).epsilon(1e-12));
  for (std::size_t k = 1; k < spec.size(); ++k) CHECK(std::abs(spec[k]) <= 1e-10);
}

TEST_CASE("fft of an integer-bin tone peaks at that bin") {
  const std::size_t n = 64;
  const std::size_t k0 = 5;
  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t)
    x[t] = std::sin(2.0 * std::numbers::pi * double(k0) * double(t) / double(n));
  const auto spec = fft(x);
  CHECK(std::abs(spec[k0]) == doctest::Approx(double(n) / 2.0).epsilon(1e-10));
  CHECK(std::abs(spec[n - k0]) == doctest::Approx(double(n) / 2.0).epsilon(1e-10));
  for (std::size_t k = 0; k < n; ++k)
    if (k != k0 && k != n - k0) CHECK(std::abs(spec[k]) <= 1e-9);
}

TEST_CASE("Parseval's identity holds for awkward lengths") {
  for (std::size_t n : {5u, 17u, 100u, 241u, 1000u}) {
    const auto x = random_signal(n, 1000 + std::uint32_t(n));
    const auto spec = fft(x);
    double time_energy = 0.0;
    for (double v : x) time_energy += v * v;
    double freq_energy = 0.0;
    for (const auto& z : spec) freq_energy += std::norm(z);
    freq_energy /= double(n);
    CHECK(freq_energy == doctest::Approx(time_energy).epsilon(1e-9));
  }
}

TEST_CASE("ifft inverts fft") {
  for (std::size_t n : {8u, 13u, 100u}) {
    const auto x = random_signal(n, 2000 + std::uint32_t(n));
    std::vector<cdouble> cx(x.begin(), x.end());
    const auto back = ifft(fft(cx));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(back[i].real() == doctest::Approx(x[i]).epsilon(1e-10));
      CHECK(std::abs(back[i].imag()) <= 1e-10);
    }
  }
}

TEST_CASE("fft is linear") {
  const auto a = random_signal(33, 1);
  const auto b = random_signal(33, 2);
  std::vector<cdouble> combo(33);
  for (std::size_t i = 0; i < 33; ++i) combo[i] = 2.0 * a[i] - 3.0 * b[i];

  const auto fa = fft(a);
  const auto fb = fft(b);
  const auto fc = fft(combo);
  for (std::size_t k = 0; k < 33; ++k)
    CHECK(std::abs(fc[k] - (2.0 * fa[k] - 3.0 * fb[k])) <= 1e-9 * (1.0 + std::abs(fc[k])));
}

TEST_CASE("transforms reject empty input") {
  CHECK_THROWS(fft(std::vector<double>{}));
  CHECK_THROWS(fft(std::vector<cdouble>{}));
  CHECK_THROWS(dft_naive(std::vector<double>{}));
  CHECK_THROWS(ifft(std::vector<cdouble>{}));
}
