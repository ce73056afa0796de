#include "eegsp/segment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <unordered_set>

#include "eegsp/textio.hpp"

namespace eegsp {

const char* to_string(ClassLabel label) {
  return label == ClassLabel::Normal ? "Normal" : "Epileptic";
}

ClassLabel parse_class_label(std::string_view text) {
  std::string lower(trim(text));
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "normal") return ClassLabel::Normal;
  if (lower == "epileptic") return ClassLabel::Epileptic;
  throw IoError("unknown class label '" + std::string(trim(text)) +
                "' (expected Normal or Epileptic)");
}

void validate_segment(const EegSegment& segment) {
  if (segment.samples.empty())
    throw std::invalid_argument("segment '" + segment.source_id + "' has no samples");
  if (!(segment.sample_rate > 0.0))
    throw std::invalid_argument("segment '" + segment.source_id +
                                "' has non-positive sample rate");
  for (std::size_t i = 0; i < segment.samples.size(); ++i) {
    if (!std::isfinite(segment.samples[i]))
      throw std::invalid_argument("segment '" + segment.source_id +
                                  "': non-finite sample at index " + std::to_string(i));
  }
}

EegSegment load_segment(const std::string& path, double sample_rate) {
  if (!(sample_rate > 0.0))
    throw std::invalid_argument("sample rate must be positive");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open segment file '" + path + "'");

  EegSegment segment;
  segment.sample_rate = sample_rate;
  segment.source_id = std::filesystem::path(path).stem().string();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty()) continue;
    double value = 0.0;
    if (!parse_double(body, value))
      throw IoError(path + ": line " + std::to_string(line_no) +
                    ": not a number: '" + std::string(body) + "'");
    segment.samples.push_back(value);
  }
  if (segment.samples.empty())
    throw IoError("segment file '" + path + "' contains no samples");
  return segment;
}

void save_segment(const EegSegment& segment, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (double v : segment.samples) out << format_double(v) << '\n';
  if (!out) throw IoError("write failed on '" + path + "'");
}

LabeledDataset load_dataset(const std::string& manifest_path, double sample_rate) {
  std::ifstream in(manifest_path);
  if (!in) throw IoError("cannot open manifest '" + manifest_path + "'");

  const auto base_dir = std::filesystem::path(manifest_path).parent_path();

  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  LabeledDataset dataset;
  std::unordered_set<std::string> seen_ids;

  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty()) continue;
    auto fields = split_csv_line(body);
    if (!saw_header) {
      if (fields.size() != 2 || fields[0] != "path" || fields[1] != "label")
        throw IoError(manifest_path + ": line " + std::to_string(line_no) +
                      ": expected header 'path,label'");
      saw_header = true;
      continue;
    }
    if (fields.size() != 2)
      throw IoError(manifest_path + ": line " + std::to_string(line_no) +
                    ": expected 'path,label', got " + std::to_string(fields.size()) +
                    " fields");
    const ClassLabel label = parse_class_label(fields[1]);
    std::filesystem::path file(fields[0]);
    if (file.is_relative()) file = base_dir / file;
    EegSegment segment = load_segment(file.string(), sample_rate);
    if (!seen_ids.insert(segment.source_id).second)
      throw IoError(manifest_path + ": duplicate source_id '" + segment.source_id + "'");
    dataset.entries.push_back({std::move(segment), label});
  }
  if (!saw_header) throw IoError("manifest '" + manifest_path + "' is empty");
  if (dataset.entries.empty())
    throw IoError("manifest '" + manifest_path + "' lists no segments");
  return dataset;
}

EegSegment synthesize_signal(const SyntheticSpec& spec) {
  if (spec.length < 1) throw std::invalid_argument("synthetic length must be >= 1");
  if (!(spec.sample_rate > 0.0))
    throw std::invalid_argument("synthetic sample rate must be positive");
  if (spec.noise_std < 0.0 || !std::isfinite(spec.noise_std))
    throw std::invalid_argument("noise_std must be finite and non-negative");
  const double nyquist = spec.sample_rate / 2.0;
  for (const auto& c : spec.components) {
    if (!(c.frequency_hz < nyquist))
      throw std::invalid_argument("component frequency " + format_double(c.frequency_hz) +
                                  " Hz reaches the Nyquist rate " + format_double(nyquist) +
                                  " Hz");
  }

  EegSegment segment;
  segment.sample_rate = spec.sample_rate;
  segment.source_id = "synthetic";
  segment.samples.resize(spec.length, 0.0);

  constexpr double two_pi = 6.283185307179586476925286766559;
  for (const auto& c : spec.components) {
    const double step = two_pi * c.frequency_hz / spec.sample_rate;
    for (std::size_t k = 0; k < spec.length; ++k)
      segment.samples[k] += c.amplitude * std::sin(step * double(k) + c.phase_rad);
  }
  if (spec.noise_std > 0.0) {
    std::mt19937 rng(spec.seed);
    std::normal_distribution<double> noise(0.0, spec.noise_std);
    for (auto& v : segment.samples) v += noise(rng);
  }
  return segment;
}

}  // namespace eegsp
