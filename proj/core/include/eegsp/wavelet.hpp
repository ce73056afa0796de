#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eegsp/segment.hpp"

namespace eegsp {

inline constexpr std::size_t kDefaultDwtLevels = 4;

// Orthogonal two-channel filter bank. The highpass is the quadrature mirror
// of the lowpass: g[n] = (-1)^n * h[L-1-n].
struct WaveletFilterBank {
  std::vector<double> lowpass;
  std::vector<double> highpass;

  std::size_t length() const { return lowpass.size(); }
};

// Daubechies filter with four vanishing moments (8 taps). The constructor
// checks sum(h) = sqrt(2), unit energy, double-shift orthogonality, and the
// vanishing moments, so a corrupted coefficient table fails fast.
const WaveletFilterBank& db4_filter_bank();

// Result of one analysis step: approximation (lowpass) and detail (highpass)
// coefficients, each of length floor((n + L - 1) / 2) for input length n.
struct DwtLevel {
  std::vector<double> approximation;
  std::vector<double> detail;
};

// Full multilevel decomposition. details[0] is the first (finest) level d1;
// approximation holds the coarsest a_levels.
struct WaveletDecomposition {
  std::vector<std::vector<double>> details;
  std::vector<double> approximation;
  std::size_t signal_length = 0;
  double sample_rate = 0.0;
  std::string source_id;

  std::size_t levels() const { return details.size(); }
};

std::size_t dwt_output_length(std::size_t input_length, std::size_t filter_length);

// One analysis step with half-point symmetric extension at the edges.
DwtLevel dwt_single_level(const std::vector<double>& signal, const WaveletFilterBank& bank);

// One synthesis step; produces exactly output_length samples. Inverts
// dwt_single_level when output_length matches the original input length.
std::vector<double> idwt_single_level(const std::vector<double>& approximation,
                                      const std::vector<double>& detail,
                                      const WaveletFilterBank& bank,
                                      std::size_t output_length);

// Iterates the analysis step on the approximation. levels = 0 returns the
// signal itself as the approximation. Each level requires at least as many
// input samples as the filter has taps.
WaveletDecomposition dwt_multilevel(const EegSegment& segment, std::size_t levels,
                                    const WaveletFilterBank& bank);
WaveletDecomposition dwt_multilevel(const EegSegment& segment, std::size_t levels);

// Physiological band names, mapped onto the five sub-bands of a four-level
// decomposition: Delta = a4, Theta = d4, Alpha = d3, Beta = d2, Gamma = d1.
enum class SubBand { Delta, Theta, Alpha, Beta, Gamma };

inline constexpr std::array<SubBand, 5> kAllSubBands = {
    SubBand::Delta, SubBand::Theta, SubBand::Alpha, SubBand::Beta, SubBand::Gamma};

std::string to_string(SubBand band);
SubBand parse_sub_band(const std::string& text);

struct BandRange {
  double low_hz = 0.0;
  double high_hz = 0.0;
};

// Conventional EEG band edges (0-4, 4-8, 8-15, 15-30, 30-60 Hz).
BandRange nominal_band_range(SubBand band);
// Edges actually realized by the dyadic filter bank at the given rate:
// level k detail spans fs/2^(k+1) .. fs/2^k.
BandRange dyadic_band_range(SubBand band, double sample_rate);

// Reconstructs the time-domain contribution of one sub-band by zeroing every
// other coefficient set and running full synthesis. Requires levels() == 4.
std::vector<double> reconstruct_subband(const WaveletDecomposition& dec, SubBand band,
                                        const WaveletFilterBank& bank);
std::vector<double> reconstruct_subband(const WaveletDecomposition& dec, SubBand band);

// Full inverse transform from all coefficients.
std::vector<double> reconstruct_full(const WaveletDecomposition& dec,
                                     const WaveletFilterBank& bank);
std::vector<double> reconstruct_full(const WaveletDecomposition& dec);

// Writes per-band coefficient CSVs, per-band reconstruction CSVs, and a
// metadata JSON with lengths, band edges, and the residual of the full
// reconstruction against the analyzed signal. Files are named after the
// decomposition's source_id. Band files require a 4-level decomposition;
// other depths get plain a/d level names and no reconstructions.
void export_decomposition(const WaveletDecomposition& dec,
                          const std::vector<double>& analyzed_signal,
                          const std::string& out_dir);

}  // namespace eegsp
