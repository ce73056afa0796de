#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "eegsp/textio.hpp"
#include "eegsp/wavelet.hpp"

namespace eegsp {

namespace {

using ordered_json = nlohmann::ordered_json;

// a4, d4, d3, d2, d1 in band order Delta..Gamma.
std::string coefficient_label(SubBand band) {
  switch (band) {
    case SubBand::Delta: return "a4";
    case SubBand::Theta: return "d4";
    case SubBand::Alpha: return "d3";
    case SubBand::Beta: return "d2";
    case SubBand::Gamma: return "d1";
  }
  throw std::invalid_argument("coefficient_label: unknown sub-band");
}

const std::vector<double>& band_coefficients(const WaveletDecomposition& dec, SubBand band) {
  switch (band) {
    case SubBand::Delta: return dec.approximation;
    case SubBand::Theta: return dec.details[3];
    case SubBand::Alpha: return dec.details[2];
    case SubBand::Beta: return dec.details[1];
    case SubBand::Gamma: return dec.details[0];
  }
  throw std::invalid_argument("band_coefficients: unknown sub-band");
}

void write_json(const ordered_json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed on '" + path.string() + "'");
}

}  // namespace

void export_decomposition(const WaveletDecomposition& dec,
                          const std::vector<double>& analyzed_signal,
                          const std::string& out_dir) {
  if (analyzed_signal.size() != dec.signal_length)
    throw std::invalid_argument("export_decomposition: analyzed signal has length " +
                                std::to_string(analyzed_signal.size()) +
                                ", decomposition records " + std::to_string(dec.signal_length));
  if (dec.source_id.empty())
    throw std::invalid_argument("export_decomposition: decomposition has no source id");

  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

  ordered_json meta;
  meta["source_id"] = dec.source_id;
  meta["sample_rate_hz"] = dec.sample_rate;
  meta["signal_length"] = dec.signal_length;
  meta["levels"] = dec.levels();

  const std::vector<double> full = reconstruct_full(dec);
  double max_err = 0.0, max_sig = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    max_err = std::max(max_err, std::abs(full[i] - analyzed_signal[i]));
    max_sig = std::max(max_sig, std::abs(analyzed_signal[i]));
  }

  if (dec.levels() == 4) {
    ordered_json bands = ordered_json::array();
    for (SubBand band : kAllSubBands) {
      const std::string name = to_string(band);
      const auto& coeffs = band_coefficients(dec, band);
      const std::string coeff_file = dec.source_id + "_" + name + "_coefficients.csv";
      const std::string recon_file = dec.source_id + "_" + name + "_reconstruction.csv";

      write_indexed_csv((dir / coeff_file).string(), "index,coefficient", coeffs);
      write_indexed_csv((dir / recon_file).string(), "index,value",
                        reconstruct_subband(dec, band));

      const BandRange nominal = nominal_band_range(band);
      const BandRange dyadic = dyadic_band_range(band, dec.sample_rate);
      ordered_json entry;
      entry["name"] = name;
      entry["coefficients"] = coefficient_label(band);
      entry["length"] = coeffs.size();
      entry["nominal_range_hz"] = {nominal.low_hz, nominal.high_hz};
      entry["dyadic_range_hz"] = {dyadic.low_hz, dyadic.high_hz};
      entry["coefficient_file"] = coeff_file;
      entry["reconstruction_file"] = recon_file;
      bands.push_back(std::move(entry));
    }
    meta["bands"] = std::move(bands);
  } else {
    ordered_json levels = ordered_json::array();
    for (std::size_t k = 1; k <= dec.levels(); ++k) {
      const std::string label = "d" + std::to_string(k);
      const std::string coeff_file = dec.source_id + "_" + label + "_coefficients.csv";
      write_indexed_csv((dir / coeff_file).string(), "index,coefficient", dec.details[k - 1]);
      ordered_json entry;
      entry["name"] = label;
      entry["length"] = dec.details[k - 1].size();
      entry["coefficient_file"] = coeff_file;
      levels.push_back(std::move(entry));
    }
    {
      const std::string label = "a" + std::to_string(dec.levels());
      const std::string coeff_file = dec.source_id + "_" + label + "_coefficients.csv";
      write_indexed_csv((dir / coeff_file).string(), "index,coefficient", dec.approximation);
      ordered_json entry;
      entry["name"] = label;
      entry["length"] = dec.approximation.size();
      entry["coefficient_file"] = coeff_file;
      levels.push_back(std::move(entry));
    }
    meta["levels_detail"] = std::move(levels);
  }

  ordered_json residual;
  residual["max_abs_error"] = max_err;
  residual["max_abs_signal"] = max_sig;
  residual["relative_max_error"] = max_sig > 0.0 ? max_err / max_sig : 0.0;
  meta["reconstruction_residual"] = std::move(residual);

  write_json(meta, dir / (dec.source_id + "_decomposition.json"));
}

}  // namespace eegsp
