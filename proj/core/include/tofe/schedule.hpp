#pragma once

#include <vector>

#include "tofe/tensor.hpp"

namespace tofe {

// Cumulative noise schedule for the DDIM forward/inverse step math.
// alpha_bar[0] == 1 and the sequence is strictly decreasing; alpha_bar[t]
// is the cumulative product of (1 - beta_s) up to step t.
struct NoiseSchedule {
  int total_steps = 0;
  std::vector<float> alpha_bar;    // length total_steps + 1
  std::vector<int> physical_step;  // timestep label fed to the denoiser

  void validate() const;

  // Sub-schedule that keeps every (total_steps / steps)-th entry, rounding
  // the stride down. Index k of the result maps to physical_step[k * stride]
  // of this schedule, so few-step runs stay aligned with the timesteps the
  // denoiser was trained on.
  NoiseSchedule strided(int steps) const;
};

NoiseSchedule make_linear_schedule(int total_steps, float beta_start,
                                   float beta_end);

// One deterministic denoising step z_t -> z_{t-1} (1 <= t <= total_steps).
Latent ddim_sample_step(const Latent& z_t, const std::vector<float>& eps,
                        int t, const NoiseSchedule& sched);

// One deterministic noising step z_t -> z_{t+1} (0 <= t <= total_steps-1);
// exact inverse of ddim_sample_step when the same eps is used.
Latent ddim_invert_step(const Latent& z_t, const std::vector<float>& eps,
                        int t, const NoiseSchedule& sched);

// Stochastic variant of the sampling step. eta = 0 reproduces
// ddim_sample_step; eta = 1 is ancestral sampling. `noise` must be a
// standard-normal draw of the latent's shape.
Latent ddim_sample_step_stochastic(const Latent& z_t,
                                   const std::vector<float>& eps,
                                   const std::vector<float>& noise, int t,
                                   const NoiseSchedule& sched, float eta);

// w * eps_cond + (1 - w) * eps_uncond.
std::vector<float> cfg_predict(const std::vector<float>& eps_cond,
                               const std::vector<float>& eps_uncond, float w);

}  // namespace tofe
