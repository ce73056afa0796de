#include "eegsp/spectral.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "eegsp/textio.hpp"

namespace eegsp {

Spectrum fft(const EegSegment& segment) {
  validate_segment(segment);
  return Spectrum{fft(segment.samples), segment.sample_rate};
}

Spectrum dft_naive(const EegSegment& segment) {
  validate_segment(segment);
  return Spectrum{dft_naive(segment.samples), segment.sample_rate};
}

Periodogram periodogram(const Spectrum& spectrum) {
  const std::size_t n = spectrum.bins.size();
  if (n == 0) throw std::invalid_argument("periodogram: empty spectrum");
  Periodogram p;
  p.sample_rate = spectrum.sample_rate;
  p.points.reserve(n / 2);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double f = double(k) * spectrum.sample_rate / double(n);
    p.points.push_back({f, std::norm(spectrum.bins[k])});
  }
  return p;
}

Periodogram periodogram(const EegSegment& segment) {
  return periodogram(fft(segment));
}

double estimate_spectral_slope(const Periodogram& p, double f_min_hz, double f_max_hz) {
  if (!(f_min_hz > 0.0) || !(f_max_hz > f_min_hz))
    throw std::invalid_argument("estimate_spectral_slope: need 0 < f_min < f_max");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (const auto& pt : p.points) {
    if (pt.frequency_hz < f_min_hz || pt.frequency_hz > f_max_hz) continue;
    if (!(pt.power > 0.0))
      throw std::invalid_argument("estimate_spectral_slope: non-positive power at " +
                                  format_double(pt.frequency_hz) + " Hz");
    const double x = std::log10(pt.frequency_hz);
    const double y = std::log10(pt.power);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2)
    throw std::invalid_argument("estimate_spectral_slope: fewer than 2 points in [" +
                                format_double(f_min_hz) + ", " + format_double(f_max_hz) +
                                "] Hz");
  const double nd = double(count);
  const double denom = nd * sxx - sx * sx;
  if (denom == 0.0)
    throw std::invalid_argument("estimate_spectral_slope: degenerate frequency range");
  return (nd * sxy - sx * sy) / denom;
}

void export_loglog(const Periodogram& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "frequency_hz,power,log10_frequency,log10_power\n";
  for (const auto& pt : p.points) {
    out << format_double(pt.frequency_hz) << ',' << format_double(pt.power) << ','
        << format_double(std::log10(pt.frequency_hz)) << ',';
    if (pt.power > 0.0) out << format_double(std::log10(pt.power));
    out << '\n';
  }
  if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace eegsp
