#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eegsp/features.hpp"
#include "eegsp/fir.hpp"
#include "eegsp/mlp.hpp"
#include "eegsp/segment.hpp"
#include "eegsp/spectral.hpp"
#include "eegsp/surrogate.hpp"
#include "eegsp/textio.hpp"
#include "eegsp/wavelet.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace eegsp;

struct CommonConfig {
  double sample_rate = kDefaultSampleRateHz;
  double cutoff_hz = kDefaultCutoffHz;
  std::size_t taps = kDefaultFirTaps;
  std::size_t levels = kDefaultDwtLevels;
  std::string band = "delta";
  std::uint32_t seed = 42;
  std::string out_dir = ".";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const CLI::Validator kOddTaps{
    [](std::string& input) -> std::string {
      unsigned long long v = 0;
      const auto* end = input.data() + input.size();
      const auto res = std::from_chars(input.data(), end, v);
      if (res.ec != std::errc{} || res.ptr != end)
        return "'" + input + "' is not a non-negative integer";
      if (v < 3 || v % 2 == 0) return "tap count must be odd and at least 3";
      return {};
    },
    "ODD"};

fs::path ensure_out_dir(const std::string& out_dir) {
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
  return dir;
}

void write_json_file(const ordered_json& doc, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed on '" + path.string() + "'");
}

void check_cutoff(const CommonConfig& cfg) {
  if (!(cfg.cutoff_hz < cfg.sample_rate / 2.0))
    throw UsageError("--cutoff-hz (" + format_double(cfg.cutoff_hz) +
                     ") must be below the Nyquist frequency " +
                     format_double(cfg.sample_rate / 2.0) + " Hz");
}

int run_decompose(const CommonConfig& cfg, const std::string& input) {
  check_cutoff(cfg);
  const fs::path dir = ensure_out_dir(cfg.out_dir);

  const EegSegment raw = load_segment(input, cfg.sample_rate);
  const FirFilter fir = design_lowpass_fir(cfg.cutoff_hz, cfg.sample_rate, cfg.taps);
  const EegSegment limited = apply_fir(fir, raw);
  const WaveletDecomposition dec = dwt_multilevel(limited, cfg.levels);
  export_decomposition(dec, limited.samples, dir.string());

  const std::vector<double> full = reconstruct_full(dec);
  double max_err = 0.0, max_sig = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    max_err = std::max(max_err, std::abs(full[i] - limited.samples[i]));
    max_sig = std::max(max_sig, std::abs(limited.samples[i]));
  }
  std::cout << "decomposed " << raw.source_id << ": " << raw.samples.size() << " samples, "
            << cfg.levels << " levels\n";
  std::cout << "reconstruction residual: max abs error " << format_double(max_err)
            << " (relative " << format_double(max_sig > 0.0 ? max_err / max_sig : 0.0)
            << ")\n";
  std::cout << "outputs in " << dir.string() << '\n';
  return 0;
}

int run_periodogram(const CommonConfig& cfg, const std::vector<std::string>& inputs,
                    bool with_slope, double slope_min, double slope_max) {
  const fs::path dir = ensure_out_dir(cfg.out_dir);
  for (const auto& input : inputs) {
    const EegSegment seg = load_segment(input, cfg.sample_rate);
    const Periodogram p = periodogram(seg);
    const std::string csv_name = seg.source_id + "_loglog.csv";
    export_loglog(p, (dir / csv_name).string());
    std::cout << "wrote " << (dir / csv_name).string() << " (" << p.points.size()
              << " frequency bins)\n";

    if (with_slope) {
      const double slope = estimate_spectral_slope(p, slope_min, slope_max);
      ordered_json meta;
      meta["source_id"] = seg.source_id;
      meta["sample_rate_hz"] = seg.sample_rate;
      meta["signal_length"] = seg.samples.size();
      meta["loglog_file"] = csv_name;
      meta["slope"] = {{"fit_range_hz", {slope_min, slope_max}}, {"value", slope}};
      const std::string meta_name = seg.source_id + "_periodogram.json";
      write_json_file(meta, dir / meta_name);
      std::cout << seg.source_id << " spectral slope over "
                << format_double(slope_min) << "-" << format_double(slope_max)
                << " Hz: " << format_double(slope) << '\n';
    }
  }
  return 0;
}

// Published reference statistics for two recordings commonly used as the
// normal/epileptic exemplars; printed beside recomputed values on request.
struct ReferenceRow {
  const char* source_id;
  double min, max, mean, median, mode, std;
};
constexpr ReferenceRow kPublishedReference[] = {
    {"Z038", -190.0, 185.0, 6.816, 7.0, -1.0, 478.5},
    {"S001", -1765.0, 1027.0, 47.1, 187.0, 399.0, 42.6},
};

void print_reference_comparison(const LabeledDataset& ds) {
  bool any = false;
  for (const auto& entry : ds.entries) {
    const ReferenceRow* ref = nullptr;
    for (const auto& row : kPublishedReference)
      if (entry.segment.source_id == row.source_id) ref = &row;
    if (!ref) continue;
    any = true;

    const FeatureVector fv = extract_features(entry.segment.samples);
    const auto computed = fv.as_vector();
    const double reference[] = {ref->min, ref->max, ref->mean, ref->median, ref->mode,
                                ref->std};
    std::cout << "\nraw-signal statistics for " << entry.segment.source_id << ":\n";
    std::cout << std::left << std::setw(10) << "feature" << std::right << std::setw(14)
              << "reference" << std::setw(16) << "computed" << '\n';
    for (std::size_t i = 0; i < FeatureVector::kDimension; ++i)
      std::cout << std::left << std::setw(10) << kFeatureNames[i] << std::right
                << std::setw(14) << format_double(reference[i]) << std::setw(16)
                << format_double(computed[i]) << '\n';
  }
  if (!any)
    std::cout << "\nno sources with published reference statistics in this manifest\n";
}

int run_features(const CommonConfig& cfg, const std::string& manifest, bool reference) {
  check_cutoff(cfg);
  const fs::path dir = ensure_out_dir(cfg.out_dir);
  const LabeledDataset ds = load_dataset(manifest, cfg.sample_rate);
  const FeaturePipelineConfig pipeline{cfg.cutoff_hz, cfg.taps, cfg.levels};

  std::vector<FeatureSource> sources;
  if (cfg.band == "all") {
    for (SubBand band : kAllSubBands)
      sources.push_back(parse_feature_source(to_string(band)));
  } else {
    sources.push_back(parse_feature_source(cfg.band));
  }

  for (FeatureSource source : sources) {
    const FeatureMatrix matrix = feature_table(ds, source, pipeline);
    const std::string name = "features_" + to_string(source) + ".csv";
    write_feature_matrix_csv(matrix, (dir / name).string());
    std::cout << "wrote " << (dir / name).string() << " (" << matrix.rows.size()
              << " rows)\n";
  }

  if (reference) print_reference_comparison(ds);
  return 0;
}

int run_train_eval(const CommonConfig& cfg, const std::string& manifest, bool synthetic,
                   std::size_t per_class, std::size_t length, const TrainConfig& train_cfg) {
  check_cutoff(cfg);
  if (cfg.band == "all")
    throw UsageError("--band all is not valid for train-eval; pick one source");
  if (!(train_cfg.split_ratio > 0.0) || !(train_cfg.split_ratio < 1.0))
    throw UsageError("--split-ratio must lie strictly between 0 and 1");
  const fs::path dir = ensure_out_dir(cfg.out_dir);

  LabeledDataset ds;
  if (synthetic) {
    ds = make_surrogate_dataset(per_class, length, cfg.sample_rate, cfg.seed);
    std::cout << "using synthetic corpus: " << ds.entries.size() << " segments\n";
  } else {
    if (manifest.empty()) throw UsageError("train-eval needs a manifest or --synthetic");
    ds = load_dataset(manifest, cfg.sample_rate);
  }

  const FeaturePipelineConfig pipeline{cfg.cutoff_hz, cfg.taps, cfg.levels};
  const FeatureSource source = parse_feature_source(cfg.band);
  const FeatureMatrix matrix = feature_table(ds, source, pipeline);

  const auto [train, test] = split_dataset(matrix, train_cfg.split_ratio, train_cfg.seed);
  const MlpModel model = train_mlp(train, train_cfg);
  const EvalReport report = evaluate(model, test);

  save_model(model, (dir / "model.json").string());
  save_eval_report(report, train_cfg, (dir / "eval_report.json").string());

  std::cout << "feature source: " << to_string(source) << '\n';
  std::cout << "train/test: " << train.rows.size() << '/' << test.rows.size() << " rows\n";
  std::cout << "held-out accuracy: " << format_double(report.accuracy) << '\n';
  std::cout << "confusion: TP " << report.true_positive << ", TN " << report.true_negative
            << ", FP " << report.false_positive << ", FN " << report.false_negative << '\n';
  std::cout << "wrote " << (dir / "model.json").string() << " and "
            << (dir / "eval_report.json").string() << '\n';
  return 0;
}

int run_synthetic(const CommonConfig& cfg, std::size_t per_class, std::size_t length) {
  const fs::path dir = ensure_out_dir(cfg.out_dir);
  const LabeledDataset ds = make_surrogate_dataset(per_class, length, cfg.sample_rate, cfg.seed);

  std::ofstream manifest(dir / "manifest.csv");
  if (!manifest) throw IoError("cannot open '" + (dir / "manifest.csv").string() + "' for writing");
  manifest << "path,label\n";
  for (const auto& entry : ds.entries) {
    const std::string file = entry.segment.source_id + ".txt";
    save_segment(entry.segment, (dir / file).string());
    manifest << file << ',' << to_string(entry.label) << '\n';
  }
  if (!manifest) throw IoError("write failed on '" + (dir / "manifest.csv").string() + "'");

  std::cout << "wrote " << ds.entries.size() << " segments and manifest.csv to "
            << dir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EEG band decomposition, spectral analysis, and seizure classification"};
  app.require_subcommand(1);

  CommonConfig cfg;
  TrainConfig train_cfg;

  const auto add_sample_rate = [&](CLI::App* sub) {
    sub->add_option("--sample-rate", cfg.sample_rate, "Sampling rate in Hz")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_filter_flags = [&](CLI::App* sub) {
    sub->add_option("--cutoff-hz", cfg.cutoff_hz, "Lowpass cutoff in Hz")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--taps", cfg.taps, "FIR tap count (odd)")
        ->check(kOddTaps)
        ->capture_default_str();
  };
  const auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--levels", cfg.levels, "Decomposition depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  };
  const auto add_out_dir = [&](CLI::App* sub) {
    sub->add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
  };

  auto* decompose = app.add_subcommand(
      "decompose", "Band-limit a segment, decompose it, and export band reconstructions");
  std::string decompose_input;
  decompose->add_option("input", decompose_input, "Segment file (one sample per line)")
      ->required();
  add_sample_rate(decompose);
  add_filter_flags(decompose);
  add_levels(decompose);
  add_out_dir(decompose);

  auto* periodogram_cmd =
      app.add_subcommand("periodogram", "Export log-log periodogram plot data");
  std::vector<std::string> periodogram_inputs;
  periodogram_cmd
      ->add_option("inputs", periodogram_inputs, "One or two segment files")
      ->required()
      ->expected(1, 2);
  bool with_slope = false;
  double slope_min = 1.0, slope_max = 60.0;
  periodogram_cmd->add_flag("--slope", with_slope,
                            "Fit a power-law slope and write it to a metadata JSON");
  periodogram_cmd->add_option("--slope-min", slope_min, "Lower fit bound in Hz")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  periodogram_cmd->add_option("--slope-max", slope_max, "Upper fit bound in Hz")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_sample_rate(periodogram_cmd);
  add_out_dir(periodogram_cmd);

  auto* features_cmd =
      app.add_subcommand("features", "Compute the statistical feature matrix for a manifest");
  std::string features_manifest;
  features_cmd->add_option("manifest", features_manifest, "Dataset manifest CSV (path,label)")
      ->required();
  bool reference = false;
  features_cmd->add_flag(
      "--reference", reference,
      "Print published reference statistics beside computed values for known sources");
  add_sample_rate(features_cmd);
  add_filter_flags(features_cmd);
  add_levels(features_cmd);
  features_cmd
      ->add_option("--band", cfg.band,
                   "Feature source: raw, whole, delta, theta, alpha, beta, gamma, or all")
      ->check(CLI::IsMember(
          {"raw", "whole", "delta", "theta", "alpha", "beta", "gamma", "all"}))
      ->capture_default_str();
  add_out_dir(features_cmd);

  auto* train_cmd = app.add_subcommand(
      "train-eval", "Train the classifier on a split of the corpus and evaluate it");
  std::string train_manifest;
  train_cmd->add_option("manifest", train_manifest, "Dataset manifest CSV (path,label)");
  bool synthetic = false;
  std::size_t per_class = 100;
  std::size_t length = kCorpusSegmentLength;
  train_cmd->add_flag("--synthetic", synthetic, "Use a generated surrogate corpus");
  train_cmd->add_option("--per-class", per_class, "Synthetic segments per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--length", length, "Synthetic segment length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--hidden-dim", train_cfg.hidden_dim, "Hidden layer width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--learning-rate", train_cfg.learning_rate, "Gradient step size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--epochs", train_cfg.epochs, "Training epochs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd
      ->add_option("--split-ratio", train_cfg.split_ratio, "Fraction of rows used for training")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_sample_rate(train_cmd);
  add_filter_flags(train_cmd);
  add_levels(train_cmd);
  train_cmd
      ->add_option("--band", cfg.band,
                   "Feature source: raw, whole, delta, theta, alpha, beta, gamma")
      ->check(CLI::IsMember({"raw", "whole", "delta", "theta", "alpha", "beta", "gamma"}))
      ->capture_default_str();
  add_seed(train_cmd);
  add_out_dir(train_cmd);

  auto* synthetic_cmd = app.add_subcommand(
      "synthetic", "Write a surrogate two-class corpus and its manifest to disk");
  std::size_t syn_per_class = 100;
  std::size_t syn_length = kCorpusSegmentLength;
  synthetic_cmd->add_option("--per-class", syn_per_class, "Segments per class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synthetic_cmd->add_option("--length", syn_length, "Segment length in samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_sample_rate(synthetic_cmd);
  add_seed(synthetic_cmd);
  add_out_dir(synthetic_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    train_cfg.seed = cfg.seed;
    if (decompose->parsed()) return run_decompose(cfg, decompose_input);
    if (periodogram_cmd->parsed())
      return run_periodogram(cfg, periodogram_inputs, with_slope, slope_min, slope_max);
    if (features_cmd->parsed()) return run_features(cfg, features_manifest, reference);
    if (train_cmd->parsed())
      return run_train_eval(cfg, train_manifest, synthetic, per_class, length, train_cfg);
    if (synthetic_cmd->parsed()) return run_synthetic(cfg, syn_per_class, syn_length);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
