#include "eegsp/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "eegsp/fir.hpp"
#include "eegsp/textio.hpp"

namespace eegsp {

FeatureVector extract_features(const std::vector<double>& signal) {
  if (signal.empty()) throw std::invalid_argument("extract_features: empty signal");
  const auto n = signal.size();

  FeatureVector fv;
  fv.min = *std::min_element(signal.begin(), signal.end());
  fv.max = *std::max_element(signal.begin(), signal.end());

  double sum = 0.0;
  for (double v : signal) sum += v;
  fv.mean = sum / double(n);

  std::vector<double> sorted = signal;
  std::sort(sorted.begin(), sorted.end());
  fv.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

  std::map<long long, std::size_t> counts;
  for (double v : signal) ++counts[std::llround(v)];
  long long mode_value = counts.begin()->first;
  std::size_t mode_count = counts.begin()->second;
  for (const auto& [value, count] : counts) {
    // std::map iterates in ascending key order, so on a tie the smallest
    // value is kept.
    if (count > mode_count) {
      mode_value = value;
      mode_count = count;
    }
  }
  fv.mode = double(mode_value);

  if (n == 1) {
    fv.std = 0.0;
  } else {
    double ss = 0.0;
    for (double v : signal) {
      const double d = v - fv.mean;
      ss += d * d;
    }
    fv.std = std::sqrt(ss / double(n - 1));
  }
  return fv;
}

std::string to_string(FeatureSource source) {
  switch (source) {
    case FeatureSource::Raw: return "raw";
    case FeatureSource::WholeSignal: return "whole";
    case FeatureSource::Delta: return "delta";
    case FeatureSource::Theta: return "theta";
    case FeatureSource::Alpha: return "alpha";
    case FeatureSource::Beta: return "beta";
    case FeatureSource::Gamma: return "gamma";
  }
  throw std::invalid_argument("to_string: unknown feature source");
}

FeatureSource parse_feature_source(const std::string& text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) lower.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  for (FeatureSource s : {FeatureSource::Raw, FeatureSource::WholeSignal, FeatureSource::Delta,
                          FeatureSource::Theta, FeatureSource::Alpha, FeatureSource::Beta,
                          FeatureSource::Gamma})
    if (lower == to_string(s)) return s;
  throw std::invalid_argument("unknown feature source '" + text +
                              "' (expected raw, whole, delta, theta, alpha, beta, or gamma)");
}

bool is_sub_band(FeatureSource source) {
  return source != FeatureSource::Raw && source != FeatureSource::WholeSignal;
}

SubBand to_sub_band(FeatureSource source) {
  switch (source) {
    case FeatureSource::Delta: return SubBand::Delta;
    case FeatureSource::Theta: return SubBand::Theta;
    case FeatureSource::Alpha: return SubBand::Alpha;
    case FeatureSource::Beta: return SubBand::Beta;
    case FeatureSource::Gamma: return SubBand::Gamma;
    default:
      throw std::invalid_argument("to_sub_band: '" + to_string(source) +
                                  "' is not a sub-band source");
  }
}

FeatureMatrix feature_table(const LabeledDataset& ds, FeatureSource source,
                            const FeaturePipelineConfig& config) {
  if (ds.entries.empty()) throw std::invalid_argument("feature_table: empty dataset");

  FeatureMatrix matrix;
  matrix.source = source;
  matrix.rows.reserve(ds.entries.size());

  for (const auto& entry : ds.entries) {
    try {
      std::vector<double> signal;
      if (source == FeatureSource::Raw) {
        signal = entry.segment.samples;
      } else {
        const FirFilter fir =
            design_lowpass_fir(config.cutoff_hz, entry.segment.sample_rate, config.fir_taps);
        EegSegment limited = apply_fir(fir, entry.segment);
        if (source == FeatureSource::WholeSignal) {
          signal = std::move(limited.samples);
        } else {
          const WaveletDecomposition dec = dwt_multilevel(limited, config.levels);
          signal = reconstruct_subband(dec, to_sub_band(source));
        }
      }
      matrix.rows.push_back({entry.segment.source_id, entry.label, extract_features(signal)});
    } catch (const std::exception& e) {
      throw std::runtime_error("feature_table: segment '" + entry.segment.source_id +
                               "': " + e.what());
    }
  }
  return matrix;
}

void write_feature_matrix_csv(const FeatureMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "source_id,label,min,max,mean,median,mode,std\n";
  for (const auto& row : matrix.rows) {
    const FeatureVector& f = row.features;
    out << row.source_id << ',' << to_string(row.label) << ',' << format_double(f.min) << ','
        << format_double(f.max) << ',' << format_double(f.mean) << ','
        << format_double(f.median) << ',' << format_double(f.mode) << ','
        << format_double(f.std) << '\n';
  }
  if (!out) throw IoError("write failed on '" + path + "'");
}

FeatureMatrix read_feature_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  if (trim(line) != "source_id,label,min,max,mean,median,mode,std")
    throw IoError(path + ": unexpected header '" + std::string(trim(line)) + "'");

  FeatureMatrix matrix;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 8)
      throw IoError(path + ":" + std::to_string(line_no) + ": expected 8 fields, found " +
                    std::to_string(fields.size()));
    FeatureRow row;
    row.source_id = fields[0];
    try {
      row.label = parse_class_label(fields[1]);
    } catch (const std::exception& e) {
      throw IoError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    double* const targets[] = {&row.features.min,    &row.features.max,
                               &row.features.mean,   &row.features.median,
                               &row.features.mode,   &row.features.std};
    for (std::size_t i = 0; i < 6; ++i)
      if (!parse_double(fields[i + 2], *targets[i]))
        throw IoError(path + ":" + std::to_string(line_no) + ": bad number '" +
                      fields[i + 2] + "'");
    matrix.rows.push_back(std::move(row));
  }
  if (matrix.rows.empty()) throw IoError(path + ": no data rows");
  return matrix;
}

}  // namespace eegsp
