#pragma once

#include <cstdint>
#include <vector>

#include "tofe/schedule.hpp"
#include "tofe/tensor.hpp"

namespace tofe {

// Continuous text-condition vector. The null-text embedding is the zero
// vector; "custom" marks encoder output, "optimized" marks vectors refined
// by the feature extractor.
struct ConditionEmbedding {
  enum class Origin : uint8_t { null_text = 0, optimized = 1, custom = 2 };

  std::vector<float> values;
  Origin origin = Origin::null_text;

  static ConditionEmbedding null_text(int dim) {
    ConditionEmbedding c;
    c.values.assign(static_cast<size_t>(dim), 0.0f);
    c.origin = Origin::null_text;
    return c;
  }
  int dim() const { return static_cast<int>(values.size()); }
};

// Fixed network layout: flatten(z_t) ++ timestep_embedding(t) ++ cond runs
// through two hidden layers into a latent-shaped output. The identity
// activation exists so tests can instantiate an exactly-linear network.
struct DenoiserTopology {
  enum class Activation : uint8_t { silu = 0, identity = 1 };

  int height = 16;
  int width = 16;
  int time_embed_dim = 16;
  int cond_dim = 32;
  int hidden_dim = 128;
  Activation activation = Activation::silu;

  int input_dim() const { return height * width + time_embed_dim + cond_dim; }
  int output_dim() const { return height * width; }
  bool operator==(const DenoiserTopology&) const = default;
};

struct DenoiserParams {
  DenoiserTopology topo;
  std::vector<float> w1, b1;  // hidden_dim x input_dim
  std::vector<float> w2, b2;  // hidden_dim x hidden_dim
  std::vector<float> w3, b3;  // output_dim x hidden_dim

  static DenoiserParams zeros(const DenoiserTopology& topo);
  static DenoiserParams random_init(const DenoiserTopology& topo,
                                    uint32_t seed);
  size_t param_count() const;
  bool finite() const;
};

std::vector<float> timestep_embedding(int t, int dim);

// Noise prediction for latent z_t at timestep label t. Pure and
// deterministic in its inputs.
std::vector<float> denoiser_forward(const DenoiserParams& params,
                                    const Latent& z_t, int t,
                                    const ConditionEmbedding& cond);

struct CondLossGrad {
  float loss = 0.0f;
  std::vector<float> grad;  // d loss / d cond.values
};

// Guided one-step denoise toward `target` and the reverse-mode gradient of
// the mean-squared residual with respect to the condition embedding.
// Gradients do not flow into `uncond` or the network weights. `t` is the
// schedule index of z_t; target must carry timestep t - 1.
CondLossGrad loss_and_grad_condition(const DenoiserParams& params,
                                     const Latent& z_t, int t,
                                     const ConditionEmbedding& cond,
                                     const ConditionEmbedding& uncond,
                                     float guidance_w, const Latent& target,
                                     const NoiseSchedule& sched);

// Evaluation-only counterpart of loss_and_grad_condition.
float condition_loss(const DenoiserParams& params, const Latent& z_t, int t,
                     const ConditionEmbedding& cond,
                     const ConditionEmbedding& uncond, float guidance_w,
                     const Latent& target, const NoiseSchedule& sched);

// Deterministic stand-in for a text encoder: a fixed random projection of
// the image squashed through tanh. Gives training a content-dependent
// condition channel so guidance has something to lean on.
struct ConditionEncoder {
  int cond_dim = 0;
  int input_dim = 0;
  std::vector<float> proj;  // cond_dim x input_dim

  ConditionEncoder(int cond_dim, int input_dim, uint32_t seed);
  ConditionEmbedding encode(const Latent& image) const;
};

uint32_t condition_encoder_seed(uint32_t model_seed);

struct TrainConfig {
  int iterations = 3000;
  int batch_size = 16;
  float learning_rate = 0.02f;
  uint32_t seed = 1;
  float cond_drop_prob = 0.1f;  // chance of substituting the null embedding

  void validate() const;
};

struct TrainStats {
  float initial_running_loss = 0.0f;
  float final_running_loss = 0.0f;
};

// Noise-regression training: draw an image, a timestep, and a Gaussian
// noise sample, diffuse, and regress the noise with SGD+momentum.
// Deterministic for a fixed seed.
DenoiserParams train_denoiser(const std::vector<Latent>& dataset,
                              const NoiseSchedule& sched,
                              const DenoiserTopology& topo,
                              const TrainConfig& cfg,
                              const ConditionEncoder& encoder,
                              TrainStats* stats = nullptr);

// Guided DDIM sampling from a seeded Gaussian endpoint down to z_0.
Latent generate(const DenoiserParams& params, const NoiseSchedule& sched,
                int steps, const ConditionEmbedding& cond, float guidance_w,
                uint32_t seed);

// DDIM inversion of z_0 for `steps` strided timesteps using the unguided
// conditional prediction. Returns all steps + 1 latents tagged 0..steps.
Trajectory invert_trajectory(const Latent& z0, const DenoiserParams& params,
                             const ConditionEmbedding& cond,
                             const NoiseSchedule& sched, int steps);

}  // namespace tofe
