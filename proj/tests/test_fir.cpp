#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "eegsp/fir.hpp"
#include "eegsp/segment.hpp"

using namespace eegsp;

namespace {

std::vector<double> tone(double freq, double fs, std::size_t n, double amp = 1.0) {
  std::vector<double> s(n);
  for (std::size_t t = 0; t < n; ++t)
    s[t] = amp * std::sin(2.0 * std::numbers::pi * freq * double(t) / fs);
  return s;
}

double rms(const std::vector<double>& s, std::size_t from, std::size_t to) {
  double acc = 0.0;
  for (std::size_t i = from; i < to; ++i) acc += s[i] * s[i];
  return std::sqrt(acc / double(to - from));
}

}  // namespace

TEST_CASE("design_lowpass_fir produces a symmetric unit-DC-gain filter") {
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);
  REQUIRE(fir.taps() == 101);
  CHECK(fir.group_delay() == 50);

  double sum = 0.0;
  for (double c : fir.coefficients) sum += c;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  for (std::size_t i = 0; i < fir.taps(); ++i)
    CHECK(fir.coefficients[i] ==
          doctest::Approx(fir.coefficients[fir.taps() - 1 - i]).epsilon(1e-12));
}

TEST_CASE("design_lowpass_fir rejects bad parameters") {
  CHECK_THROWS(design_lowpass_fir(60.0, 173.61, 100));  // even
  CHECK_THROWS(design_lowpass_fir(60.0, 173.61, 1));    // too short
  CHECK_THROWS(design_lowpass_fir(0.0, 173.61, 101));
  CHECK_THROWS(design_lowpass_fir(90.0, 173.61, 101));  // at/above Nyquist
  CHECK_THROWS(design_lowpass_fir(60.0, 0.0, 101));
}

TEST_CASE("frequency response passes the passband and kills the stopband") {
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);

  const double gain_dc = fir_magnitude_response(fir, 0.0);
  CHECK(gain_dc == doctest::Approx(1.0).epsilon(1e-12));

  // 10 Hz must stay within +/-0.5 dB of unity
  const double gain_10 = fir_magnitude_response(fir, 10.0);
  CHECK(20.0 * std::log10(gain_10) > -0.5);
  CHECK(20.0 * std::log10(gain_10) < 0.5);

  // 80 Hz must be down at least 40 dB
  const double gain_80 = fir_magnitude_response(fir, 80.0);
  CHECK(20.0 * std::log10(gain_80) < -40.0);
}

TEST_CASE("apply_fir preserves length and alignment") {
  const std::size_t n = 1024;
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);
  const auto x = tone(10.0, kDefaultSampleRateHz, n);
  const auto y = apply_fir(fir, x);
  REQUIRE(y.size() == n);

  // group delay is compensated: interior samples line up with the input
  double max_err = 0.0;
  for (std::size_t i = 200; i < n - 200; ++i) max_err = std::max(max_err, std::abs(y[i] - x[i]));
  CHECK(max_err < 0.01);
}

TEST_CASE("apply_fir leaves a constant signal untouched") {
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);
  const std::vector<double> x(300, 7.5);
  const auto y = apply_fir(fir, x);
  for (double v : y) CHECK(v == doctest::Approx(7.5).epsilon(1e-12));
}

TEST_CASE("apply_fir suppresses a stopband tone") {
  const std::size_t n = 2048;
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);
  const auto x = tone(80.0, kDefaultSampleRateHz, n);
  const auto y = apply_fir(fir, x);

  const double in_rms = rms(x, 100, n - 100);
  const double out_rms = rms(y, 100, n - 100);
  CHECK(out_rms / in_rms < 0.01);
}

TEST_CASE("apply_fir keeps segment metadata") {
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);
  EegSegment seg;
  seg.samples = tone(5.0, kDefaultSampleRateHz, 400);
  seg.sample_rate = kDefaultSampleRateHz;
  seg.source_id = "meta";
  const EegSegment out = apply_fir(fir, seg);
  CHECK(out.source_id == "meta");
  CHECK(out.sample_rate == kDefaultSampleRateHz);
  CHECK(out.samples.size() == 400);
}

TEST_CASE("apply_fir validates inputs") {
  const FirFilter fir = design_lowpass_fir(60.0, kDefaultSampleRateHz, 101);
  CHECK_THROWS(apply_fir(fir, std::vector<double>{}));
  CHECK_THROWS(apply_fir(FirFilter{}, std::vector<double>{1.0, 2.0}));
}
