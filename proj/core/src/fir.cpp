#include "eegsp/fir.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace eegsp {

FirFilter design_lowpass_fir(double cutoff_hz, double sample_rate, std::size_t taps) {
  if (!(sample_rate > 0.0)) throw std::invalid_argument("design_lowpass_fir: sample rate must be positive");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < sample_rate / 2.0))
    throw std::invalid_argument("design_lowpass_fir: cutoff must lie in (0, sample_rate/2)");
  if (taps < 3 || taps % 2 == 0)
    throw std::invalid_argument("design_lowpass_fir: tap count must be odd and >= 3");

  const double fc = cutoff_hz / sample_rate;
  const auto mid = double(taps - 1) / 2.0;
  std::vector<double> h(taps);
  for (std::size_t i = 0; i < taps; ++i) {
    const double m = double(i) - mid;
    const double sinc = m == 0.0 ? 2.0 * fc
                                 : std::sin(2.0 * std::numbers::pi * fc * m) /
                                       (std::numbers::pi * m);
    const double window =
        0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * double(i) / double(taps - 1));
    h[i] = sinc * window;
  }

  double sum = 0.0;
  for (double v : h) sum += v;
  for (double& v : h) v /= sum;

  return FirFilter{std::move(h), cutoff_hz, sample_rate};
}

namespace {

// Half-point symmetric extension: index -1 maps to 0, index n maps to n-1,
// and further out-of-range indices keep reflecting back into [0, n).
std::size_t reflect_index(std::ptrdiff_t i, std::size_t n) {
  const auto sn = std::ptrdiff_t(n);
  while (i < 0 || i >= sn) {
    if (i < 0) i = -i - 1;
    if (i >= sn) i = 2 * sn - 1 - i;
  }
  return std::size_t(i);
}

}  // namespace

std::vector<double> apply_fir(const FirFilter& filter, const std::vector<double>& signal) {
  if (filter.coefficients.empty()) throw std::invalid_argument("apply_fir: empty filter");
  if (signal.empty()) throw std::invalid_argument("apply_fir: empty signal");

  const auto n = signal.size();
  const auto taps = filter.taps();
  const auto delay = filter.group_delay();

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // y[i] = sum_k h[k] * x[i + delay - k], with reflected edges.
    double acc = 0.0;
    for (std::size_t k = 0; k < taps; ++k) {
      const auto j = std::ptrdiff_t(i) + std::ptrdiff_t(delay) - std::ptrdiff_t(k);
      acc += filter.coefficients[k] * signal[reflect_index(j, n)];
    }
    out[i] = acc;
  }
  return out;
}

EegSegment apply_fir(const FirFilter& filter, const EegSegment& segment) {
  validate_segment(segment);
  EegSegment out = segment;
  out.samples = apply_fir(filter, segment.samples);
  return out;
}

double fir_magnitude_response(const FirFilter& filter, double frequency_hz) {
  if (filter.coefficients.empty()) throw std::invalid_argument("fir_magnitude_response: empty filter");
  const double omega = 2.0 * std::numbers::pi * frequency_hz / filter.sample_rate;
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < filter.taps(); ++k)
    acc += filter.coefficients[k] * std::polar(1.0, -omega * double(k));
  return std::abs(acc);
}

}  // namespace eegsp
