#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eegsp {

// Default acquisition parameters of the public single-channel corpus this
// library targets: 4097-sample segments recorded at 173.61 Hz.
inline constexpr double kDefaultSampleRateHz = 173.61;
inline constexpr std::size_t kCorpusSegmentLength = 4097;

enum class ClassLabel { Normal, Epileptic };

const char* to_string(ClassLabel label);

// Case-insensitive parse of "Normal"/"Epileptic". Throws IoError otherwise.
ClassLabel parse_class_label(std::string_view text);

// One single-channel recording. Samples are amplitudes in file units
// (microvolt-scale integers in the public corpus, real-valued for synthetic
// input); sample_rate is Hz. Immutable by convention once built.
struct EegSegment {
  std::vector<double> samples;
  double sample_rate = 0.0;
  std::string source_id;
};

// Throws if the segment violates its invariants: non-empty, all samples
// finite, sample_rate > 0.
void validate_segment(const EegSegment& segment);

struct LabeledDataset {
  struct Entry {
    EegSegment segment;
    ClassLabel label;
  };
  std::vector<Entry> entries;
};

struct ToneComponent {
  double frequency_hz = 0.0;
  double amplitude = 0.0;
  double phase_rad = 0.0;
};

// Recipe for a deterministic synthetic segment: a sum of sinusoids plus
// optional gaussian noise. Lets the pipeline run without the recorded corpus.
struct SyntheticSpec {
  std::vector<ToneComponent> components;
  double noise_std = 0.0;
  std::size_t length = 0;
  double sample_rate = kDefaultSampleRateHz;
  std::uint32_t seed = 0;
};

// Load a segment from an ASCII file with one numeric sample per line
// (surrounding whitespace and CRLF tolerated). source_id is the file stem.
// Throws IoError on a missing file, an empty file, or an unparsable line
// (the message names the line number).
EegSegment load_segment(const std::string& path, double sample_rate = kDefaultSampleRateHz);

// Inverse of load_segment: one sample per line, shortest round-trip formatting.
void save_segment(const EegSegment& segment, const std::string& path);

// Load a labeled dataset from a CSV manifest with header "path,label" and
// label in {Normal, Epileptic}. Relative paths resolve against the manifest's
// directory. Row order is preserved. Throws IoError on an empty manifest, a
// bad label, a duplicate source_id, or any segment load failure.
LabeledDataset load_dataset(const std::string& manifest_path,
                            double sample_rate = kDefaultSampleRateHz);

// sample k = sum_i amp_i * sin(2*pi*freq_i*k/fs + phase_i) + gaussian(0, noise_std),
// deterministic for a fixed seed. Throws if a component frequency reaches the
// Nyquist rate or the spec is otherwise invalid.
EegSegment synthesize_signal(const SyntheticSpec& spec);

}  // namespace eegsp
