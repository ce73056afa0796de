#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eegsp/segment.hpp"
#include "eegsp/wavelet.hpp"

namespace eegsp {

// The six summary statistics reported per signal, in fixed column order.
struct FeatureVector {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double mode = 0.0;
  double std = 0.0;

  static constexpr std::size_t kDimension = 6;
  std::vector<double> as_vector() const { return {min, max, mean, median, mode, std}; }
};

inline constexpr std::array<const char*, FeatureVector::kDimension> kFeatureNames = {
    "min", "max", "mean", "median", "mode", "std"};

// Conventions: median uses the midpoint of the two central order statistics
// for even lengths; std is the sample standard deviation (divisor n-1, zero
// for a single sample); mode counts samples after rounding to the nearest
// integer (halves away from zero) and breaks ties toward the smallest value.
FeatureVector extract_features(const std::vector<double>& signal);

// What the statistics are computed on. Raw leaves the signal untouched;
// WholeSignal band-limits it but skips the decomposition; a named band
// band-limits, decomposes, and reconstructs that band first.
enum class FeatureSource {
  Raw,
  WholeSignal,
  Delta,
  Theta,
  Alpha,
  Beta,
  Gamma,
};

std::string to_string(FeatureSource source);
FeatureSource parse_feature_source(const std::string& text);
bool is_sub_band(FeatureSource source);
SubBand to_sub_band(FeatureSource source);

struct FeaturePipelineConfig {
  double cutoff_hz = 60.0;
  std::size_t fir_taps = 101;
  std::size_t levels = 4;
};

struct FeatureRow {
  std::string source_id;
  ClassLabel label = ClassLabel::Normal;
  FeatureVector features;
};

struct FeatureMatrix {
  std::vector<FeatureRow> rows;
  FeatureSource source = FeatureSource::Delta;
};

// Runs the per-segment pipeline over the whole dataset, preserving entry
// order. Failures are rethrown with the offending source_id prepended.
FeatureMatrix feature_table(const LabeledDataset& ds, FeatureSource source,
                            const FeaturePipelineConfig& config);

// Header: source_id,label,min,max,mean,median,mode,std
void write_feature_matrix_csv(const FeatureMatrix& matrix, const std::string& path);
FeatureMatrix read_feature_matrix_csv(const std::string& path);

}  // namespace eegsp
