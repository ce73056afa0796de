#pragma once

#include <string>
#include <vector>

#include "eegsp/fft.hpp"
#include "eegsp/segment.hpp"

namespace eegsp {

// Complex DFT coefficients of one segment; bin k sits at k*sample_rate/N Hz.
struct Spectrum {
  std::vector<cdouble> bins;
  double sample_rate = 0.0;
};

struct PeriodogramPoint {
  double frequency_hz = 0.0;
  double power = 0.0;
};

// Power vs frequency: |X[k]|^2 at k*fs/N for k = 1..floor(N/2). DC is left
// out so log-log plots are well-defined; frequencies are strictly increasing
// up to the Nyquist rate.
struct Periodogram {
  std::vector<PeriodogramPoint> points;
  double sample_rate = 0.0;
};

Spectrum fft(const EegSegment& segment);
Spectrum dft_naive(const EegSegment& segment);

Periodogram periodogram(const EegSegment& segment);
Periodogram periodogram(const Spectrum& spectrum);

// Least-squares slope of log10(power) vs log10(frequency) over points with
// frequency in [f_min_hz, f_max_hz]. A 1/f spectrum fits to slope -1.
// Requires at least two points in range, all with positive power.
double estimate_spectral_slope(const Periodogram& p, double f_min_hz, double f_max_hz);

// CSV export "frequency_hz,power,log10_frequency,log10_power". Rows with zero
// power leave the log10_power field empty rather than emitting -inf.
void export_loglog(const Periodogram& p, const std::string& path);

}  // namespace eegsp
