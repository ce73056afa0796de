#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eegsp/features.hpp"

namespace eegsp {

struct TrainConfig {
  std::size_t hidden_dim = 10;
  double learning_rate = 0.05;
  std::size_t epochs = 2000;
  std::uint32_t seed = 42;
  double split_ratio = 0.5;
};

// Single-hidden-layer feedforward network: tanh hidden units, logistic
// output. Stores the z-score statistics fitted on the training set so
// prediction normalizes inputs the same way training did. Zero-variance
// features are dropped at fit time; kept_features maps network inputs back
// to positions in the original feature vector.
struct MlpModel {
  std::size_t original_dim = 0;
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
  std::vector<double> w1;  // hidden x input, row-major
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
  std::vector<double> feature_mean;
  std::vector<double> feature_std;
  std::vector<std::size_t> kept_features;
  std::vector<std::string> dropped_features;
  TrainConfig config;
};

struct Prediction {
  ClassLabel label = ClassLabel::Normal;
  double probability = 0.0;  // probability of Epileptic
};

struct SamplePrediction {
  std::string source_id;
  ClassLabel truth = ClassLabel::Normal;
  ClassLabel predicted = ClassLabel::Normal;
  double probability = 0.0;
};

struct EvalReport {
  double accuracy = 0.0;
  std::size_t true_positive = 0;   // Epileptic predicted Epileptic
  std::size_t true_negative = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
  std::vector<SamplePrediction> samples;
};

// Stratified shuffle split: per class, a seeded shuffle puts round(ratio * n)
// rows into train and the rest into test. Errors if either side would lose a
// class entirely. Row order within each part follows the input matrix.
std::pair<FeatureMatrix, FeatureMatrix> split_dataset(const FeatureMatrix& matrix, double ratio,
                                                      std::uint32_t seed);

// Full-batch gradient descent on mean binary cross-entropy. Weights start
// uniform in [-0.5, 0.5] drawn from the seed in the order w1 (row-major),
// b1, w2, b2. Rows of x are samples; y holds 0 (Normal) or 1 (Epileptic).
// When loss_history is given it receives the pre-update loss of every epoch.
// A non-finite loss aborts with the epoch number in the message.
MlpModel train_mlp(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                   const TrainConfig& config, std::vector<double>* loss_history = nullptr);
MlpModel train_mlp(const FeatureMatrix& train, const TrainConfig& config,
                   std::vector<double>* loss_history = nullptr);

Prediction predict(const MlpModel& model, const FeatureVector& features);
// Same, for a raw feature vector of the model's original dimension.
Prediction predict(const MlpModel& model, const std::vector<double>& features);

EvalReport evaluate(const MlpModel& model, const FeatureMatrix& test);

// Loss and analytic gradients on already-normalized inputs, exposed so the
// backpropagation can be checked against finite differences.
struct MlpGradients {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
};
double mlp_loss(const MlpModel& model, const std::vector<std::vector<double>>& x,
                const std::vector<int>& y);
MlpGradients mlp_gradients(const MlpModel& model, const std::vector<std::vector<double>>& x,
                           const std::vector<int>& y);

void save_model(const MlpModel& model, const std::string& path);
MlpModel load_model(const std::string& path);
void save_eval_report(const EvalReport& report, const TrainConfig& config,
                      const std::string& path);

}  // namespace eegsp
