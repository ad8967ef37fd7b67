#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace tofe {

struct ClassifierConfig {
  float learning_rate = 1e-5f;
  int iterations = 10000;
  int batch_size = 64;
  uint32_t seed = 9;

  void validate() const;
};

// Four affine layers (hidden width 256) with per-dimension input
// standardization frozen from the training set. Outputs two logits:
// index 0 real, index 1 fake.
struct MlpModel {
  int input_dim = 0;
  int hidden_dim = 256;
  std::vector<float> w1, b1, w2, b2, w3, b3, w4, b4;
  std::vector<float> norm_mean, norm_std;

  static MlpModel init(int input_dim, uint32_t seed, int hidden_dim = 256);
  bool finite() const;
};

// Mini-batch SGD on softmax cross-entropy. Deterministic in the seed.
// Requires both classes present and a uniform feature dimension.
MlpModel train_mlp(const std::vector<std::vector<float>>& features,
                   const std::vector<uint8_t>& labels,
                   const ClassifierConfig& cfg,
                   std::vector<float>* loss_curve = nullptr);

// Softmax probability of the fake class, in (0, 1).
float predict(const MlpModel& model, const std::vector<float>& feature);

std::array<float, 2> predict_probs(const MlpModel& model,
                                   const std::vector<float>& feature);

}  // namespace tofe
