#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

namespace namd::diffusion {

/// Linear beta schedule; alpha_bar(0) = 1, alpha_bar(t) = prod_{s<=t} (1 - beta_s).
struct NoiseSchedule {
  int64_t steps = 1000;
  double beta_start = 8.5e-4;
  double beta_end = 1.2e-2;
  std::vector<double> betas;       // index t-1 for t in [1, steps]
  std::vector<double> alpha_bars;  // index t for t in [0, steps]

  static NoiseSchedule linear(int64_t steps = 1000, double beta_start = 8.5e-4, double beta_end = 1.2e-2);

  double beta(int64_t t) const;
  double alpha_bar(int64_t t) const;
  /// alpha_bar gathered for a batch of int64 timesteps, float32 [B].
  torch::Tensor alpha_bar(const torch::Tensor& t) const;

  nlohmann::json to_json() const;
  static NoiseSchedule from_json(const nlohmann::json& j);
};

/// sqrt(alpha_bar_t) z + sqrt(1 - alpha_bar_t) noise, t per batch element.
torch::Tensor forward_diffuse(const torch::Tensor& z, const torch::Tensor& t, const torch::Tensor& noise,
                              const NoiseSchedule& sched);
torch::Tensor forward_diffuse(const torch::Tensor& z, int64_t t, const torch::Tensor& noise,
                              const NoiseSchedule& sched);

/// Evenly strided descending subset {T, T - T/n, ..., T/n} (rounded) of [1, T].
std::vector<int64_t> ddim_timesteps(const NoiseSchedule& sched, int64_t n_steps);

/// One deterministic DDIM update from t to t_prev (t_prev = 0 lands on x0).
torch::Tensor ddim_step(const torch::Tensor& z_t, const torch::Tensor& eps, int64_t t, int64_t t_prev,
                        const NoiseSchedule& sched);

/// Noise prediction for a batch of latents at one timestep.
using EpsFn = std::function<torch::Tensor(const torch::Tensor& z_t, int64_t t)>;

/// Runs eta = 0 DDIM over ddim_timesteps(sched, n_steps) from z_T to step 0.
torch::Tensor ddim_sample(const EpsFn& eps, torch::Tensor z_T, const NoiseSchedule& sched, int64_t n_steps);

}  // namespace namd::diffusion
