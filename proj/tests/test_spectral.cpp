#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "eegsp/segment.hpp"
#include "eegsp/spectral.hpp"
#include "eegsp/textio.hpp"

using namespace eegsp;

namespace {

EegSegment tone_segment(double freq, double fs, std::size_t n) {
  EegSegment seg;
  seg.sample_rate = fs;
  seg.source_id = "tone";
  seg.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t)
    seg.samples[t] = std::sin(2.0 * std::numbers::pi * freq * double(t) / fs);
  return seg;
}

}  // namespace

TEST_CASE("periodogram covers (0, Nyquist] without the DC bin") {
  const EegSegment seg = tone_segment(10.0, 100.0, 64);
  const Periodogram p = periodogram(seg);
  REQUIRE(p.points.size() == 32);
  CHECK(p.points.front().frequency_hz == doctest::Approx(100.0 / 64.0));
  CHECK(p.points.back().frequency_hz == doctest::Approx(50.0));
  CHECK(p.sample_rate == 100.0);

  // odd length: floor(n/2) bins
  const Periodogram podd = periodogram(tone_segment(10.0, 100.0, 65));
  CHECK(podd.points.size() == 32);
}

TEST_CASE("periodogram peaks at the tone frequency") {
  const std::size_t n = 128;
  const double fs = 128.0;
  const Periodogram p = periodogram(tone_segment(16.0, fs, n));

  std::size_t best = 0;
  for (std::size_t i = 1; i < p.points.size(); ++i)
    if (p.points[i].power > p.points[best].power) best = i;
  CHECK(p.points[best].frequency_hz == doctest::Approx(16.0));
  // integer-bin sine: |X[k0]| = n/2, power = (n/2)^2
  CHECK(p.points[best].power == doctest::Approx(4096.0).epsilon(1e-9));
}

TEST_CASE("periodogram power is the squared spectrum magnitude") {
  const EegSegment seg = tone_segment(7.0, 60.0, 24);
  const Spectrum spec = fft(seg);
  const Periodogram p = periodogram(spec);
  REQUIRE(p.points.size() == 12);
  for (std::size_t k = 1; k <= 12; ++k)
    CHECK(p.points[k - 1].power == doctest::Approx(std::norm(spec.bins[k])).epsilon(1e-12));
}

TEST_CASE("a DC-only signal has an empty-looking periodogram") {
  EegSegment seg;
  seg.sample_rate = 50.0;
  seg.source_id = "dc";
  seg.samples.assign(32, 5.0);
  const Periodogram p = periodogram(seg);
  for (const auto& pt : p.points) CHECK(pt.power <= 1e-18);
}

TEST_CASE("estimate_spectral_slope recovers an exact power law") {
  Periodogram p;
  p.sample_rate = 100.0;
  for (int k = 1; k <= 40; ++k) {
    const double f = double(k);
    p.points.push_back({f, 3.0 * std::pow(f, -2.0)});
  }
  CHECK(estimate_spectral_slope(p, 1.0, 40.0) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(estimate_spectral_slope(p, 5.0, 20.0) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("estimate_spectral_slope validates its inputs") {
  Periodogram p;
  p.sample_rate = 100.0;
  p.points = {{1.0, 1.0}, {2.0, 0.25}, {3.0, 0.0}};

  SUBCASE("bad range") { CHECK_THROWS(estimate_spectral_slope(p, 10.0, 5.0)); }
  SUBCASE("too few points in range") { CHECK_THROWS(estimate_spectral_slope(p, 1.5, 1.9)); }
  SUBCASE("zero power inside range") { CHECK_THROWS(estimate_spectral_slope(p, 1.0, 3.0)); }
  SUBCASE("zero power outside range is fine") {
    CHECK(estimate_spectral_slope(p, 1.0, 2.0) == doctest::Approx(-2.0).epsilon(1e-12));
  }
}

TEST_CASE("export_loglog writes the documented columns") {
  Periodogram p;
  p.sample_rate = 100.0;
  p.points = {{1.0, 100.0}, {2.0, 0.0}, {4.0, 0.01}};

  const auto path =
      (std::filesystem::temp_directory_path() / "eegsp_loglog_test.csv").string();
  export_loglog(p, path);

  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "frequency_hz,power,log10_frequency,log10_power");
  REQUIRE(std::getline(in, line));
  CHECK(line == "1,100,0,2");
  REQUIRE(std::getline(in, line));
  // zero power: log10 column left empty rather than writing -inf
  CHECK(line == "2,0,0.3010299956639812,");
  REQUIRE(std::getline(in, line));
  CHECK(line == "4,0.01,0.6020599913279624,-2");
  CHECK_FALSE(std::getline(in, line));
  std::remove(path.c_str());
}

TEST_CASE("export_loglog refuses an unwritable path") {
  Periodogram p;
  p.points = {{1.0, 1.0}};
  CHECK_THROWS_AS(export_loglog(p, "/nonexistent_dir/p.csv"), IoError);
}
