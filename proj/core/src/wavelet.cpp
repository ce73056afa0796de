#include "eegsp/wavelet.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eegsp {

namespace {

constexpr std::array<double, 8> kDb4Lowpass = {
    0.2303778133088965,    0.7148465705529157,   0.6308807679298589,
    -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
    0.0328830116668852,    -0.010597401785069032};

std::vector<double> quadrature_mirror(const std::vector<double>& h) {
  const auto L = h.size();
  std::vector<double> g(L);
  for (std::size_t n = 0; n < L; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    g[n] = sign * h[L - 1 - n];
  }
  return g;
}

void validate_filter_bank(const WaveletFilterBank& bank) {
  const auto& h = bank.lowpass;
  const auto& g = bank.highpass;
  const auto L = h.size();

  double sum = 0.0, energy = 0.0;
  for (double v : h) {
    sum += v;
    energy += v * v;
  }
  if (std::abs(sum - std::sqrt(2.0)) > 1e-12)
    throw std::logic_error("wavelet filter bank: lowpass sum is not sqrt(2)");
  if (std::abs(energy - 1.0) > 1e-12)
    throw std::logic_error("wavelet filter bank: lowpass does not have unit energy");

  for (std::size_t shift = 1; shift < L / 2; ++shift) {
    double dot = 0.0;
    for (std::size_t n = 0; n + 2 * shift < L; ++n) dot += h[n] * h[n + 2 * shift];
    if (std::abs(dot) > 1e-12)
      throw std::logic_error("wavelet filter bank: double-shift orthogonality violated");
  }

  for (int p = 0; p < 4; ++p) {
    double moment = 0.0;
    for (std::size_t n = 0; n < L; ++n) moment += std::pow(double(n), p) * g[n];
    if (std::abs(moment) > 1e-10)
      throw std::logic_error("wavelet filter bank: vanishing moment " + std::to_string(p) +
                             " violated");
  }
}

// Half-point symmetric extension: ... x[1] x[0] | x[0] x[1] ... x[n-1] | x[n-1] x[n-2] ...
std::size_t reflect_index(std::ptrdiff_t i, std::size_t n) {
  const auto sn = std::ptrdiff_t(n);
  while (i < 0 || i >= sn) {
    if (i < 0) i = -i - 1;
    if (i >= sn) i = 2 * sn - 1 - i;
  }
  return std::size_t(i);
}

}  // namespace

const WaveletFilterBank& db4_filter_bank() {
  static const WaveletFilterBank bank = [] {
    WaveletFilterBank b;
    b.lowpass.assign(kDb4Lowpass.begin(), kDb4Lowpass.end());
    b.highpass = quadrature_mirror(b.lowpass);
    validate_filter_bank(b);
    return b;
  }();
  return bank;
}

std::size_t dwt_output_length(std::size_t input_length, std::size_t filter_length) {
  return (input_length + filter_length - 1) / 2;
}

DwtLevel dwt_single_level(const std::vector<double>& signal, const WaveletFilterBank& bank) {
  const auto n = signal.size();
  const auto L = bank.length();
  if (n < L)
    throw std::invalid_argument("dwt_single_level: signal length " + std::to_string(n) +
                                " is shorter than the filter (" + std::to_string(L) + ")");

  const auto out_len = dwt_output_length(n, L);
  DwtLevel level;
  level.approximation.assign(out_len, 0.0);
  level.detail.assign(out_len, 0.0);

  for (std::size_t p = 0; p < out_len; ++p) {
    double a = 0.0, d = 0.0;
    const auto base = 2 * std::ptrdiff_t(p) - std::ptrdiff_t(L) + 2;
    for (std::size_t j = 0; j < L; ++j) {
      const double x = signal[reflect_index(base + std::ptrdiff_t(j), n)];
      a += bank.lowpass[j] * x;
      d += bank.highpass[j] * x;
    }
    level.approximation[p] = a;
    level.detail[p] = d;
  }
  return level;
}

std::vector<double> idwt_single_level(const std::vector<double>& approximation,
                                      const std::vector<double>& detail,
                                      const WaveletFilterBank& bank,
                                      std::size_t output_length) {
  const auto La = approximation.size();
  if (detail.size() != La)
    throw std::invalid_argument("idwt_single_level: coefficient lengths differ");
  if (La == 0) throw std::invalid_argument("idwt_single_level: empty coefficients");

  const auto L = bank.length();
  const auto full = 2 * La + L - 2;
  if (output_length > full)
    throw std::invalid_argument("idwt_single_level: requested length exceeds synthesis support");

  std::vector<double> synth(full, 0.0);
  for (std::size_t p = 0; p < La; ++p) {
    const double a = approximation[p];
    const double d = detail[p];
    for (std::size_t m = 0; m < L; ++m)
      synth[2 * p + m] += a * bank.lowpass[m] + d * bank.highpass[m];
  }

  const auto start = (full - output_length) / 2;
  return {synth.begin() + std::ptrdiff_t(start),
          synth.begin() + std::ptrdiff_t(start + output_length)};
}

WaveletDecomposition dwt_multilevel(const EegSegment& segment, std::size_t levels,
                                    const WaveletFilterBank& bank) {
  validate_segment(segment);

  WaveletDecomposition dec;
  dec.signal_length = segment.samples.size();
  dec.sample_rate = segment.sample_rate;
  dec.source_id = segment.source_id;

  std::vector<double> approx = segment.samples;
  for (std::size_t level = 1; level <= levels; ++level) {
    if (approx.size() < bank.length())
      throw std::invalid_argument("dwt_multilevel: level " + std::to_string(level) +
                                  " needs at least " + std::to_string(bank.length()) +
                                  " samples, have " + std::to_string(approx.size()));
    DwtLevel step = dwt_single_level(approx, bank);
    dec.details.push_back(std::move(step.detail));
    approx = std::move(step.approximation);
  }
  dec.approximation = std::move(approx);
  return dec;
}

WaveletDecomposition dwt_multilevel(const EegSegment& segment, std::size_t levels) {
  return dwt_multilevel(segment, levels, db4_filter_bank());
}

std::string to_string(SubBand band) {
  switch (band) {
    case SubBand::Delta: return "delta";
    case SubBand::Theta: return "theta";
    case SubBand::Alpha: return "alpha";
    case SubBand::Beta: return "beta";
    case SubBand::Gamma: return "gamma";
  }
  throw std::invalid_argument("to_string: unknown sub-band");
}

SubBand parse_sub_band(const std::string& text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) lower.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  for (SubBand band : kAllSubBands)
    if (lower == to_string(band)) return band;
  throw std::invalid_argument("unknown sub-band '" + text +
                              "' (expected delta, theta, alpha, beta, or gamma)");
}

BandRange nominal_band_range(SubBand band) {
  switch (band) {
    case SubBand::Delta: return {0.0, 4.0};
    case SubBand::Theta: return {4.0, 8.0};
    case SubBand::Alpha: return {8.0, 15.0};
    case SubBand::Beta: return {15.0, 30.0};
    case SubBand::Gamma: return {30.0, 60.0};
  }
  throw std::invalid_argument("nominal_band_range: unknown sub-band");
}

BandRange dyadic_band_range(SubBand band, double sample_rate) {
  // Detail level k covers fs/2^(k+1) .. fs/2^k; the level-4 approximation
  // covers 0 .. fs/32.
  switch (band) {
    case SubBand::Delta: return {0.0, sample_rate / 32.0};
    case SubBand::Theta: return {sample_rate / 32.0, sample_rate / 16.0};
    case SubBand::Alpha: return {sample_rate / 16.0, sample_rate / 8.0};
    case SubBand::Beta: return {sample_rate / 8.0, sample_rate / 4.0};
    case SubBand::Gamma: return {sample_rate / 4.0, sample_rate / 2.0};
  }
  throw std::invalid_argument("dyadic_band_range: unknown sub-band");
}

namespace {

std::vector<std::size_t> level_lengths(const WaveletDecomposition& dec,
                                       const WaveletFilterBank& bank) {
  // lengths[k] is the approximation length after k analysis steps.
  std::vector<std::size_t> lengths(dec.levels() + 1);
  lengths[0] = dec.signal_length;
  for (std::size_t k = 1; k <= dec.levels(); ++k)
    lengths[k] = dwt_output_length(lengths[k - 1], bank.length());

  for (std::size_t k = 1; k <= dec.levels(); ++k)
    if (dec.details[k - 1].size() != lengths[k])
      throw std::invalid_argument("wavelet reconstruction: detail level " + std::to_string(k) +
                                  " has length " + std::to_string(dec.details[k - 1].size()) +
                                  ", expected " + std::to_string(lengths[k]));
  if (dec.approximation.size() != lengths[dec.levels()])
    throw std::invalid_argument("wavelet reconstruction: approximation has length " +
                                std::to_string(dec.approximation.size()) + ", expected " +
                                std::to_string(lengths[dec.levels()]));
  return lengths;
}

std::vector<double> synthesize(const std::vector<double>& coarsest,
                               const std::vector<std::vector<double>>& details,
                               const std::vector<std::size_t>& lengths,
                               const WaveletFilterBank& bank) {
  std::vector<double> approx = coarsest;
  for (std::size_t k = details.size(); k >= 1; --k)
    approx = idwt_single_level(approx, details[k - 1], bank, lengths[k - 1]);
  return approx;
}

}  // namespace

std::vector<double> reconstruct_full(const WaveletDecomposition& dec,
                                     const WaveletFilterBank& bank) {
  if (dec.levels() == 0) return dec.approximation;
  const auto lengths = level_lengths(dec, bank);
  return synthesize(dec.approximation, dec.details, lengths, bank);
}

std::vector<double> reconstruct_full(const WaveletDecomposition& dec) {
  return reconstruct_full(dec, db4_filter_bank());
}

std::vector<double> reconstruct_subband(const WaveletDecomposition& dec, SubBand band,
                                        const WaveletFilterBank& bank) {
  if (dec.levels() != 4)
    throw std::invalid_argument("reconstruct_subband: band mapping requires a 4-level "
                                "decomposition, have " +
                                std::to_string(dec.levels()) + " levels");
  const auto lengths = level_lengths(dec, bank);

  std::vector<std::vector<double>> details(4);
  for (std::size_t k = 0; k < 4; ++k) details[k].assign(dec.details[k].size(), 0.0);
  std::vector<double> approx(dec.approximation.size(), 0.0);

  switch (band) {
    case SubBand::Delta: approx = dec.approximation; break;
    case SubBand::Theta: details[3] = dec.details[3]; break;
    case SubBand::Alpha: details[2] = dec.details[2]; break;
    case SubBand::Beta: details[1] = dec.details[1]; break;
    case SubBand::Gamma: details[0] = dec.details[0]; break;
  }
  return synthesize(approx, details, lengths, bank);
}

std::vector<double> reconstruct_subband(const WaveletDecomposition& dec, SubBand band) {
  return reconstruct_subband(dec, band, db4_filter_bank());
}

}  // namespace eegsp
