#include "eegsp/surrogate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace eegsp {

namespace {

std::string padded_id(const char* prefix, std::size_t i) {
  std::string num = std::to_string(i);
  while (num.size() < 3) num.insert(num.begin(), '0');
  return std::string(prefix) + num;
}

}  // namespace

LabeledDataset make_surrogate_dataset(std::size_t per_class, std::size_t length,
                                      double sample_rate, std::uint32_t seed) {
  if (per_class == 0) throw std::invalid_argument("make_surrogate_dataset: per_class must be positive");
  if (length == 0) throw std::invalid_argument("make_surrogate_dataset: length must be positive");
  if (!(sample_rate > 0.0))
    throw std::invalid_argument("make_surrogate_dataset: sample rate must be positive");

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> tone_freq(2.0, 28.0);
  std::uniform_real_distribution<double> tone_amp(15.0, 45.0);
  std::uniform_real_distribution<double> slow_freq(2.0, 4.0);
  std::uniform_real_distribution<double> slow_amp(150.0, 300.0);
  std::uniform_real_distribution<double> spike_amp(500.0, 1000.0);
  std::uniform_int_distribution<std::size_t> spike_period(40, 80);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> noise(0.0, 8.0);

  LabeledDataset ds;
  ds.entries.reserve(2 * per_class);

  for (std::size_t i = 0; i < per_class; ++i) {
    EegSegment seg;
    seg.sample_rate = sample_rate;
    seg.source_id = padded_id("surrogate_normal_", i);
    seg.samples.assign(length, 0.0);
    for (int tone = 0; tone < 4; ++tone) {
      const double f = tone_freq(rng);
      const double a = tone_amp(rng);
      const double ph = phase(rng);
      for (std::size_t t = 0; t < length; ++t)
        seg.samples[t] +=
            a * std::sin(2.0 * std::numbers::pi * f * double(t) / sample_rate + ph);
    }
    for (std::size_t t = 0; t < length; ++t) seg.samples[t] += noise(rng);
    ds.entries.push_back({std::move(seg), ClassLabel::Normal});
  }

  for (std::size_t i = 0; i < per_class; ++i) {
    EegSegment seg;
    seg.sample_rate = sample_rate;
    seg.source_id = padded_id("surrogate_epileptic_", i);
    seg.samples.assign(length, 0.0);

    const double f = slow_freq(rng);
    const double a = slow_amp(rng);
    const double ph = phase(rng);
    for (std::size_t t = 0; t < length; ++t)
      seg.samples[t] += a * std::sin(2.0 * std::numbers::pi * f * double(t) / sample_rate + ph);

    const double spike = spike_amp(rng);
    const std::size_t period = spike_period(rng);
    double polarity = 1.0;
    for (std::size_t start = period / 2; start < length; start += period) {
      for (std::size_t t = start; t < length && t < start + 6 * 5; ++t)
        seg.samples[t] += polarity * spike * std::exp(-double(t - start) / 5.0);
      polarity = -polarity;
    }
    for (std::size_t t = 0; t < length; ++t) seg.samples[t] += noise(rng);
    ds.entries.push_back({std::move(seg), ClassLabel::Epileptic});
  }

  return ds;
}

}  // namespace eegsp
