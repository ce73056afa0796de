#include "eegsp/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "eegsp/textio.hpp"

namespace eegsp {

namespace {

using ordered_json = nlohmann::ordered_json;

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Forward pass for one already-normalized sample.
double forward(const MlpModel& m, const std::vector<double>& x, std::vector<double>& hidden) {
  for (std::size_t h = 0; h < m.hidden_dim; ++h) {
    double z = m.b1[h];
    for (std::size_t k = 0; k < m.input_dim; ++k) z += m.w1[h * m.input_dim + k] * x[k];
    hidden[h] = std::tanh(z);
  }
  double z2 = m.b2;
  for (std::size_t h = 0; h < m.hidden_dim; ++h) z2 += m.w2[h] * hidden[h];
  return logistic(z2);
}

void check_network_inputs(const MlpModel& m, const std::vector<std::vector<double>>& x,
                          const std::vector<int>& y) {
  if (x.empty()) throw std::invalid_argument("mlp: empty input set");
  if (x.size() != y.size()) throw std::invalid_argument("mlp: inputs and targets differ in count");
  for (const auto& row : x)
    if (row.size() != m.input_dim)
      throw std::invalid_argument("mlp: input width " + std::to_string(row.size()) +
                                  " does not match network input dimension " +
                                  std::to_string(m.input_dim));
  for (int t : y)
    if (t != 0 && t != 1) throw std::invalid_argument("mlp: targets must be 0 or 1");
}

// Mean binary cross-entropy; fills grads when given. The log arguments are
// clamped so a saturated but correct output does not overflow to inf, while
// NaN from diverged weights still propagates.
double forward_backward(const MlpModel& m, const std::vector<std::vector<double>>& x,
                        const std::vector<int>& y, MlpGradients* grads) {
  const auto n = x.size();
  if (grads) {
    grads->w1.assign(m.w1.size(), 0.0);
    grads->b1.assign(m.b1.size(), 0.0);
    grads->w2.assign(m.w2.size(), 0.0);
    grads->b2 = 0.0;
  }

  constexpr double kTiny = 1e-12;
  double loss = 0.0;
  std::vector<double> hidden(m.hidden_dim);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = forward(m, x[i], hidden);
    const double target = double(y[i]);
    loss -= target * std::log(std::max(p, kTiny)) +
            (1.0 - target) * std::log(std::max(1.0 - p, kTiny));

    if (grads) {
      const double dz2 = (p - target) / double(n);
      grads->b2 += dz2;
      for (std::size_t h = 0; h < m.hidden_dim; ++h) {
        grads->w2[h] += dz2 * hidden[h];
        const double dz1 = dz2 * m.w2[h] * (1.0 - hidden[h] * hidden[h]);
        grads->b1[h] += dz1;
        for (std::size_t k = 0; k < m.input_dim; ++k)
          grads->w1[h * m.input_dim + k] += dz1 * x[i][k];
      }
    }
  }
  return loss / double(n);
}

}  // namespace

std::pair<FeatureMatrix, FeatureMatrix> split_dataset(const FeatureMatrix& matrix, double ratio,
                                                      std::uint32_t seed) {
  if (!(ratio > 0.0) || !(ratio < 1.0))
    throw std::invalid_argument("split_dataset: ratio must lie in (0, 1)");

  std::mt19937 rng(seed);
  std::vector<bool> in_train(matrix.rows.size(), false);

  for (ClassLabel label : {ClassLabel::Normal, ClassLabel::Epileptic}) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
      if (matrix.rows[i].label == label) indices.push_back(i);
    if (indices.empty())
      throw std::invalid_argument("split_dataset: class '" + std::string(to_string(label)) +
                                  "' absent from the dataset");

    std::shuffle(indices.begin(), indices.end(), rng);
    const auto train_count = std::size_t(std::llround(ratio * double(indices.size())));
    if (train_count == 0 || train_count == indices.size())
      throw std::invalid_argument("split_dataset: ratio " + format_double(ratio) +
                                  " leaves class '" + std::string(to_string(label)) +
                                  "' empty on one side (" + std::to_string(indices.size()) +
                                  " rows)");
    for (std::size_t i = 0; i < train_count; ++i) in_train[indices[i]] = true;
  }

  std::pair<FeatureMatrix, FeatureMatrix> parts;
  parts.first.source = matrix.source;
  parts.second.source = matrix.source;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i)
    (in_train[i] ? parts.first : parts.second).rows.push_back(matrix.rows[i]);
  return parts;
}

MlpModel train_mlp(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                   const TrainConfig& config, std::vector<double>* loss_history) {
  if (x.empty()) throw std::invalid_argument("train_mlp: empty training set");
  if (x.size() != y.size())
    throw std::invalid_argument("train_mlp: inputs and targets differ in count");
  if (config.hidden_dim == 0 || config.epochs == 0 || !(config.learning_rate > 0.0))
    throw std::invalid_argument("train_mlp: hidden_dim, epochs, and learning_rate must be positive");

  const auto n = x.size();
  const auto original_dim = x[0].size();
  if (original_dim == 0) throw std::invalid_argument("train_mlp: zero-width feature vectors");
  for (const auto& row : x)
    if (row.size() != original_dim)
      throw std::invalid_argument("train_mlp: ragged feature matrix");
  for (const auto& row : x)
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("train_mlp: non-finite feature value");

  bool has0 = false, has1 = false;
  for (int t : y) {
    if (t == 0) has0 = true;
    else if (t == 1) has1 = true;
    else throw std::invalid_argument("train_mlp: targets must be 0 or 1");
  }
  if (!has0 || !has1)
    throw std::invalid_argument("train_mlp: training set contains a single class");

  MlpModel model;
  model.original_dim = original_dim;
  model.hidden_dim = config.hidden_dim;
  model.config = config;

  for (std::size_t j = 0; j < original_dim; ++j) {
    double sum = 0.0;
    for (const auto& row : x) sum += row[j];
    const double mean = sum / double(n);
    double ss = 0.0;
    for (const auto& row : x) {
      const double d = row[j] - mean;
      ss += d * d;
    }
    const double std_dev = std::sqrt(ss / double(n - 1));
    if (std_dev > 1e-12 * std::max(1.0, std::abs(mean))) {
      model.kept_features.push_back(j);
      model.feature_mean.push_back(mean);
      model.feature_std.push_back(std_dev);
    } else {
      const std::string name = original_dim == FeatureVector::kDimension
                                   ? std::string(kFeatureNames[j])
                                   : "feature_" + std::to_string(j);
      model.dropped_features.push_back(name);
      std::cerr << "warning: feature '" << name
                << "' has zero variance on the training set and was dropped\n";
    }
  }
  if (model.kept_features.empty())
    throw std::invalid_argument("train_mlp: every feature has zero variance");
  model.input_dim = model.kept_features.size();

  std::vector<std::vector<double>> xn(n, std::vector<double>(model.input_dim));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < model.input_dim; ++k)
      xn[i][k] = (x[i][model.kept_features[k]] - model.feature_mean[k]) / model.feature_std[k];

  std::mt19937 rng(config.seed);
  std::uniform_real_distribution<double> init(-0.5, 0.5);
  model.w1.resize(model.hidden_dim * model.input_dim);
  model.b1.resize(model.hidden_dim);
  model.w2.resize(model.hidden_dim);
  for (double& w : model.w1) w = init(rng);
  for (double& w : model.b1) w = init(rng);
  for (double& w : model.w2) w = init(rng);
  model.b2 = init(rng);

  if (loss_history) {
    loss_history->clear();
    loss_history->reserve(config.epochs);
  }

  MlpGradients grads;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double loss = forward_backward(model, xn, y, &grads);
    if (!std::isfinite(loss))
      throw std::runtime_error("train_mlp: loss became non-finite at epoch " +
                               std::to_string(epoch));
    if (loss_history) loss_history->push_back(loss);

    const double lr = config.learning_rate;
    for (std::size_t i = 0; i < model.w1.size(); ++i) model.w1[i] -= lr * grads.w1[i];
    for (std::size_t i = 0; i < model.b1.size(); ++i) model.b1[i] -= lr * grads.b1[i];
    for (std::size_t i = 0; i < model.w2.size(); ++i) model.w2[i] -= lr * grads.w2[i];
    model.b2 -= lr * grads.b2;
  }
  return model;
}

MlpModel train_mlp(const FeatureMatrix& train, const TrainConfig& config,
                   std::vector<double>* loss_history) {
  if (train.rows.empty()) throw std::invalid_argument("train_mlp: empty training matrix");
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  x.reserve(train.rows.size());
  y.reserve(train.rows.size());
  for (const auto& row : train.rows) {
    x.push_back(row.features.as_vector());
    y.push_back(row.label == ClassLabel::Epileptic ? 1 : 0);
  }
  return train_mlp(x, y, config, loss_history);
}

Prediction predict(const MlpModel& model, const std::vector<double>& features) {
  if (features.size() != model.original_dim)
    throw std::invalid_argument("predict: feature vector has width " +
                                std::to_string(features.size()) + ", model expects " +
                                std::to_string(model.original_dim));
  for (double v : features)
    if (!std::isfinite(v)) throw std::invalid_argument("predict: non-finite feature value");

  std::vector<double> xn(model.input_dim);
  for (std::size_t k = 0; k < model.input_dim; ++k)
    xn[k] = (features[model.kept_features[k]] - model.feature_mean[k]) / model.feature_std[k];

  std::vector<double> hidden(model.hidden_dim);
  const double p = forward(model, xn, hidden);
  return {p > 0.5 ? ClassLabel::Epileptic : ClassLabel::Normal, p};
}

Prediction predict(const MlpModel& model, const FeatureVector& features) {
  return predict(model, features.as_vector());
}

EvalReport evaluate(const MlpModel& model, const FeatureMatrix& test) {
  if (test.rows.empty()) throw std::invalid_argument("evaluate: empty test matrix");

  EvalReport report;
  report.samples.reserve(test.rows.size());
  for (const auto& row : test.rows) {
    const Prediction pred = predict(model, row.features);
    const bool truth = row.label == ClassLabel::Epileptic;
    const bool guess = pred.label == ClassLabel::Epileptic;
    if (truth && guess) ++report.true_positive;
    else if (!truth && !guess) ++report.true_negative;
    else if (!truth && guess) ++report.false_positive;
    else ++report.false_negative;
    report.samples.push_back({row.source_id, row.label, pred.label, pred.probability});
  }
  report.accuracy =
      double(report.true_positive + report.true_negative) / double(test.rows.size());
  return report;
}

double mlp_loss(const MlpModel& model, const std::vector<std::vector<double>>& x,
                const std::vector<int>& y) {
  check_network_inputs(model, x, y);
  return forward_backward(model, x, y, nullptr);
}

MlpGradients mlp_gradients(const MlpModel& model, const std::vector<std::vector<double>>& x,
                           const std::vector<int>& y) {
  check_network_inputs(model, x, y);
  MlpGradients grads;
  forward_backward(model, x, y, &grads);
  return grads;
}

namespace {

ordered_json config_to_json(const TrainConfig& config) {
  ordered_json j;
  j["hidden_dim"] = config.hidden_dim;
  j["learning_rate"] = config.learning_rate;
  j["epochs"] = config.epochs;
  j["seed"] = config.seed;
  j["split_ratio"] = config.split_ratio;
  return j;
}

TrainConfig config_from_json(const ordered_json& j) {
  TrainConfig config;
  config.hidden_dim = j.at("hidden_dim").get<std::size_t>();
  config.learning_rate = j.at("learning_rate").get<double>();
  config.epochs = j.at("epochs").get<std::size_t>();
  config.seed = j.at("seed").get<std::uint32_t>();
  config.split_ratio = j.at("split_ratio").get<double>();
  return config;
}

}  // namespace

void save_model(const MlpModel& model, const std::string& path) {
  ordered_json j;
  j["model_type"] = "feedforward-ann";
  j["original_dim"] = model.original_dim;
  j["input_dim"] = model.input_dim;
  j["hidden_dim"] = model.hidden_dim;
  j["activation"] = {{"hidden", "tanh"}, {"output", "logistic"}};
  j["kept_features"] = model.kept_features;
  j["dropped_features"] = model.dropped_features;
  j["normalization"] = {{"mean", model.feature_mean}, {"std", model.feature_std}};
  j["weights"] = {{"w1", model.w1}, {"b1", model.b1}, {"w2", model.w2}, {"b2", model.b2}};
  j["config"] = config_to_json(model.config);

  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed on '" + path + "'");
}

MlpModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");

  MlpModel model;
  try {
    const ordered_json j = ordered_json::parse(in);
    if (j.at("model_type").get<std::string>() != "feedforward-ann")
      throw IoError(path + ": unknown model_type");
    model.original_dim = j.at("original_dim").get<std::size_t>();
    model.input_dim = j.at("input_dim").get<std::size_t>();
    model.hidden_dim = j.at("hidden_dim").get<std::size_t>();
    model.kept_features = j.at("kept_features").get<std::vector<std::size_t>>();
    model.dropped_features = j.at("dropped_features").get<std::vector<std::string>>();
    model.feature_mean = j.at("normalization").at("mean").get<std::vector<double>>();
    model.feature_std = j.at("normalization").at("std").get<std::vector<double>>();
    model.w1 = j.at("weights").at("w1").get<std::vector<double>>();
    model.b1 = j.at("weights").at("b1").get<std::vector<double>>();
    model.w2 = j.at("weights").at("w2").get<std::vector<double>>();
    model.b2 = j.at("weights").at("b2").get<double>();
    model.config = config_from_json(j.at("config"));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path + ": " + e.what());
  }

  if (model.kept_features.size() != model.input_dim ||
      model.feature_mean.size() != model.input_dim ||
      model.feature_std.size() != model.input_dim ||
      model.w1.size() != model.hidden_dim * model.input_dim ||
      model.b1.size() != model.hidden_dim || model.w2.size() != model.hidden_dim)
    throw IoError(path + ": inconsistent model dimensions");
  for (double s : model.feature_std)
    if (!(s > 0.0)) throw IoError(path + ": non-positive normalization std");
  for (std::size_t k : model.kept_features)
    if (k >= model.original_dim) throw IoError(path + ": kept feature index out of range");
  return model;
}

void save_eval_report(const EvalReport& report, const TrainConfig& config,
                      const std::string& path) {
  ordered_json j;
  j["accuracy"] = report.accuracy;
  j["test_size"] = report.samples.size();
  j["confusion"] = {{"true_positive", report.true_positive},
                    {"true_negative", report.true_negative},
                    {"false_positive", report.false_positive},
                    {"false_negative", report.false_negative}};
  j["config"] = config_to_json(config);
  ordered_json samples = ordered_json::array();
  for (const auto& s : report.samples) {
    ordered_json entry;
    entry["source_id"] = s.source_id;
    entry["label"] = to_string(s.truth);
    entry["predicted"] = to_string(s.predicted);
    entry["probability"] = s.probability;
    samples.push_back(std::move(entry));
  }
  j["samples"] = std::move(samples);

  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace eegsp
