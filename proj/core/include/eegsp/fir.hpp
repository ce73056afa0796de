#pragma once

#include <cstddef>
#include <vector>

#include "eegsp/segment.hpp"

namespace eegsp {

inline constexpr double kDefaultCutoffHz = 60.0;
inline constexpr std::size_t kDefaultFirTaps = 101;

// Linear-phase lowpass FIR filter. Coefficients are symmetric and sum to 1,
// so DC passes with unit gain and the group delay is (taps-1)/2 samples.
struct FirFilter {
  std::vector<double> coefficients;
  double cutoff_hz = 0.0;
  double sample_rate = 0.0;

  std::size_t taps() const { return coefficients.size(); }
  std::size_t group_delay() const { return (coefficients.size() - 1) / 2; }
};

// Hamming-windowed sinc design. Requires an odd tap count and
// 0 < cutoff < sample_rate / 2.
FirFilter design_lowpass_fir(double cutoff_hz, double sample_rate, std::size_t taps);

// Filters the signal and compensates the group delay so the output has the
// same length as the input and stays aligned with it. Edges are handled by
// symmetric reflection.
std::vector<double> apply_fir(const FirFilter& filter, const std::vector<double>& signal);
EegSegment apply_fir(const FirFilter& filter, const EegSegment& segment);

// |H(f)| at a single frequency, evaluated directly from the coefficients.
double fir_magnitude_response(const FirFilter& filter, double frequency_hz);

}  // namespace eegsp
