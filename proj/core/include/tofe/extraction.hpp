#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tofe/denoiser.hpp"
#include "tofe/schedule.hpp"
#include "tofe/tensor.hpp"

namespace tofe {

struct TofeConfig {
  float eta = 0.01f;      // gradient-descent learning rate
  int iters = 10;         // updates per timestep
  int steps = 1;          // trajectory timesteps to optimize
  float guidance_w = 7.5f;
  std::optional<ConditionEmbedding> init;  // default: null-text

  void validate() const;
};

// Per-timestep optimized condition embeddings for one image, stored in
// optimization order (t = steps down to 1), plus the trajectory endpoint
// needed to reconstruct without re-inverting.
struct TofeFeature {
  std::vector<ConditionEmbedding> embeddings;
  std::vector<float> per_step_final_loss;
  std::string source_id;
  uint8_t label = 0;  // 0 real, 1 fake
  std::string generator_tag;
  Latent z_end;

  int steps() const { return static_cast<int>(embeddings.size()); }
  int cond_dim() const {
    return embeddings.empty() ? 0 : embeddings.front().dim();
  }
  // Classifier input: embeddings concatenated in stored order.
  std::vector<float> flattened() const;
};

// Inverts the image, then refines a condition embedding per timestep by
// plain gradient descent so the guided one-step denoise lands on the
// inversion trajectory. Each timestep starts fresh from the configured
// init. Deterministic.
TofeFeature extract_features(const Latent& image, const DenoiserParams& params,
                             const NoiseSchedule& sched,
                             const TofeConfig& cfg);

// Guided DDIM sampling from z_T using the per-timestep embeddings of
// `feature`. z_T must be the endpoint cached during extraction.
Latent reconstruct(const TofeFeature& feature, const DenoiserParams& params,
                   const NoiseSchedule& sched, const TofeConfig& cfg,
                   const Latent& z_T);

}  // namespace tofe
