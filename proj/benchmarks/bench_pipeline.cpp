#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "eegsp/features.hpp"
#include "eegsp/fft.hpp"
#include "eegsp/fir.hpp"
#include "eegsp/mlp.hpp"
#include "eegsp/segment.hpp"
#include "eegsp/spectral.hpp"
#include "eegsp/surrogate.hpp"
#include "eegsp/wavelet.hpp"

namespace {

using namespace eegsp;

std::vector<double> random_signal(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 100.0);
  std::vector<double> s(n);
  for (double& v : s) v = dist(rng);
  return s;
}

EegSegment random_segment(std::size_t n, std::uint32_t seed) {
  EegSegment seg;
  seg.samples = random_signal(n, seed);
  seg.sample_rate = kDefaultSampleRateHz;
  seg.source_id = "bench";
  return seg;
}

void BM_FftPow2(benchmark::State& state) {
  const auto signal = random_signal(4096, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fft(signal));
}
BENCHMARK(BM_FftPow2);

void BM_FftOddLength(benchmark::State& state) {
  const auto signal = random_signal(kCorpusSegmentLength, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fft(signal));
}
BENCHMARK(BM_FftOddLength);

void BM_Periodogram(benchmark::State& state) {
  const auto seg = random_segment(kCorpusSegmentLength, 3);
  for (auto _ : state) benchmark::DoNotOptimize(periodogram(seg));
}
BENCHMARK(BM_Periodogram);

void BM_FirFilter(benchmark::State& state) {
  const auto seg = random_segment(kCorpusSegmentLength, 4);
  const FirFilter fir =
      design_lowpass_fir(kDefaultCutoffHz, kDefaultSampleRateHz, kDefaultFirTaps);
  for (auto _ : state) benchmark::DoNotOptimize(apply_fir(fir, seg.samples));
}
BENCHMARK(BM_FirFilter);

void BM_DwtMultilevel(benchmark::State& state) {
  const auto seg = random_segment(kCorpusSegmentLength, 5);
  for (auto _ : state) benchmark::DoNotOptimize(dwt_multilevel(seg, kDefaultDwtLevels));
}
BENCHMARK(BM_DwtMultilevel);

void BM_SubbandReconstruction(benchmark::State& state) {
  const auto seg = random_segment(kCorpusSegmentLength, 6);
  const WaveletDecomposition dec = dwt_multilevel(seg, kDefaultDwtLevels);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_subband(dec, SubBand::Delta));
}
BENCHMARK(BM_SubbandReconstruction);

void BM_FeaturePipelinePerSegment(benchmark::State& state) {
  LabeledDataset ds;
  ds.entries.push_back({random_segment(kCorpusSegmentLength, 7), ClassLabel::Normal});
  const FeaturePipelineConfig config;
  for (auto _ : state)
    benchmark::DoNotOptimize(feature_table(ds, FeatureSource::Delta, config));
}
BENCHMARK(BM_FeaturePipelinePerSegment);

void BM_TrainSmall(benchmark::State& state) {
  const LabeledDataset ds = make_surrogate_dataset(10, 512, kDefaultSampleRateHz, 42);
  const FeatureMatrix matrix = feature_table(ds, FeatureSource::Delta, {});
  TrainConfig config;
  config.epochs = 200;
  for (auto _ : state) benchmark::DoNotOptimize(train_mlp(matrix, config));
}
BENCHMARK(BM_TrainSmall);

}  // namespace

BENCHMARK_MAIN();
