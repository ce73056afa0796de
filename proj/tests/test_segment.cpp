#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "eegsp/segment.hpp"
#include "eegsp/textio.hpp"

using namespace eegsp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_text(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

}  // namespace

TEST_CASE("load_segment reads one sample per line") {
  TempDir dir("eegsp_segment_load");
  write_text(dir.path / "rec01.txt", "10\n-20\n3.5\n");

  const EegSegment seg = load_segment((dir.path / "rec01.txt").string(), 100.0);
  CHECK(seg.source_id == "rec01");
  CHECK(seg.sample_rate == 100.0);
  REQUIRE(seg.samples.size() == 3);
  CHECK(seg.samples[0] == 10.0);
  CHECK(seg.samples[1] == -20.0);
  CHECK(seg.samples[2] == 3.5);
}

TEST_CASE("load_segment tolerates CRLF and blank lines") {
  TempDir dir("eegsp_segment_crlf");
  write_text(dir.path / "rec.txt", "1\r\n\r\n2\r\n");
  const EegSegment seg = load_segment((dir.path / "rec.txt").string());
  REQUIRE(seg.samples.size() == 2);
  CHECK(seg.samples[1] == 2.0);
}

TEST_CASE("load_segment names the offending line") {
  TempDir dir("eegsp_segment_badline");
  write_text(dir.path / "rec.txt", "1\n2\nbogus\n");
  CHECK_THROWS_WITH_AS(load_segment((dir.path / "rec.txt").string()),
                       doctest::Contains("line 3"), IoError);
}

TEST_CASE("load_segment rejects missing and empty files") {
  TempDir dir("eegsp_segment_missing");
  CHECK_THROWS_AS(load_segment((dir.path / "absent.txt").string()), IoError);
  write_text(dir.path / "empty.txt", "");
  CHECK_THROWS_AS(load_segment((dir.path / "empty.txt").string()), IoError);
}

TEST_CASE("save_segment then load_segment is the identity") {
  TempDir dir("eegsp_segment_roundtrip");
  EegSegment seg;
  seg.samples = {1.25, -3.0, 0.0, 1e-7, 12345.6789};
  seg.sample_rate = kDefaultSampleRateHz;
  seg.source_id = "orig";
  save_segment(seg, (dir.path / "copy.txt").string());

  const EegSegment back = load_segment((dir.path / "copy.txt").string());
  CHECK(back.source_id == "copy");
  REQUIRE(back.samples.size() == seg.samples.size());
  for (std::size_t i = 0; i < seg.samples.size(); ++i)
    CHECK(back.samples[i] == seg.samples[i]);
}

TEST_CASE("validate_segment enforces the basic invariants") {
  EegSegment seg;
  seg.sample_rate = 100.0;
  CHECK_THROWS(validate_segment(seg));  // empty

  seg.samples = {1.0, 2.0};
  CHECK_NOTHROW(validate_segment(seg));

  seg.sample_rate = 0.0;
  CHECK_THROWS(validate_segment(seg));

  seg.sample_rate = 100.0;
  seg.samples[1] = std::nan("");
  CHECK_THROWS(validate_segment(seg));
}

TEST_CASE("class labels parse case-insensitively") {
  CHECK(parse_class_label("Normal") == ClassLabel::Normal);
  CHECK(parse_class_label("normal") == ClassLabel::Normal);
  CHECK(parse_class_label("EPILEPTIC") == ClassLabel::Epileptic);
  CHECK_THROWS_AS(parse_class_label("seizure"), IoError);
  CHECK(std::string(to_string(ClassLabel::Epileptic)) == "Epileptic");
}

TEST_CASE("load_dataset resolves paths relative to the manifest") {
  TempDir dir("eegsp_dataset_load");
  fs::create_directories(dir.path / "data");
  write_text(dir.path / "data" / "a.txt", "1\n2\n");
  write_text(dir.path / "data" / "b.txt", "3\n4\n");
  write_text(dir.path / "manifest.csv", "path,label\ndata/a.txt,Normal\ndata/b.txt,Epileptic\n");

  const LabeledDataset ds = load_dataset((dir.path / "manifest.csv").string());
  REQUIRE(ds.entries.size() == 2);
  CHECK(ds.entries[0].segment.source_id == "a");
  CHECK(ds.entries[0].label == ClassLabel::Normal);
  CHECK(ds.entries[1].segment.source_id == "b");
  CHECK(ds.entries[1].label == ClassLabel::Epileptic);
}

TEST_CASE("load_dataset rejects malformed manifests") {
  TempDir dir("eegsp_dataset_bad");
  write_text(dir.path / "a.txt", "1\n");

  SUBCASE("missing header") {
    write_text(dir.path / "m.csv", "a.txt,Normal\n");
    CHECK_THROWS_AS(load_dataset((dir.path / "m.csv").string()), IoError);
  }
  SUBCASE("unknown label") {
    write_text(dir.path / "m.csv", "path,label\na.txt,Sick\n");
    CHECK_THROWS_AS(load_dataset((dir.path / "m.csv").string()), IoError);
  }
  SUBCASE("no data rows") {
    write_text(dir.path / "m.csv", "path,label\n");
    CHECK_THROWS_AS(load_dataset((dir.path / "m.csv").string()), IoError);
  }
  SUBCASE("duplicate source id") {
    write_text(dir.path / "m.csv", "path,label\na.txt,Normal\na.txt,Epileptic\n");
    CHECK_THROWS_WITH_AS(load_dataset((dir.path / "m.csv").string()),
                         doctest::Contains("duplicate"), IoError);
  }
  SUBCASE("missing segment file") {
    write_text(dir.path / "m.csv", "path,label\nmissing.txt,Normal\n");
    CHECK_THROWS_AS(load_dataset((dir.path / "m.csv").string()), IoError);
  }
}

TEST_CASE("synthesize_signal is deterministic and respects the recipe") {
  SyntheticSpec spec;
  spec.components = {{10.0, 2.0, 0.0}};
  spec.length = 256;
  spec.sample_rate = 100.0;
  spec.seed = 7;

  const EegSegment a = synthesize_signal(spec);
  const EegSegment b = synthesize_signal(spec);
  REQUIRE(a.samples.size() == 256);
  CHECK(a.samples == b.samples);

  // noiseless tone: check an exact sample value
  const double expected = 2.0 * std::sin(2.0 * std::acos(-1.0) * 10.0 * 3.0 / 100.0);
  CHECK(a.samples[3] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("synthesize_signal adds reproducible noise only when asked") {
  SyntheticSpec spec;
  spec.components = {{5.0, 1.0, 0.5}};
  spec.noise_std = 0.3;
  spec.length = 64;
  spec.sample_rate = 100.0;
  spec.seed = 11;

  const EegSegment noisy1 = synthesize_signal(spec);
  const EegSegment noisy2 = synthesize_signal(spec);
  CHECK(noisy1.samples == noisy2.samples);

  spec.noise_std = 0.0;
  const EegSegment clean = synthesize_signal(spec);
  CHECK(clean.samples != noisy1.samples);
}

TEST_CASE("synthesize_signal rejects frequencies at or above Nyquist") {
  SyntheticSpec spec;
  spec.components = {{50.0, 1.0, 0.0}};
  spec.length = 16;
  spec.sample_rate = 100.0;
  CHECK_THROWS(synthesize_signal(spec));
}
