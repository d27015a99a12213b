#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

#include "namd/context/encoder.hpp"
#include "namd/diffusion/schedule.hpp"
#include "namd/diffusion/unet.hpp"

namespace namd::diffusion {

/// Scaled latents of longitudinal pairs with the baseline report of each pair.
struct DiffusionData {
  torch::Tensor baseline;  // [N, 4, h, w]
  torch::Tensor followup;  // [N, 4, h, w]
  std::vector<std::string> reports;

  int64_t size() const { return baseline.defined() ? baseline.size(0) : 0; }
};

/// Inverse standard deviation over every element of `latents`.
double latent_scale(const torch::Tensor& latents);

/// Linear warmup from `start` to `peak` over warmup_steps, then cosine decay to
/// `floor` over decay_steps, then constant. Zero step counts skip that phase.
struct LrSchedule {
  double start = 1e-6;
  double peak = 1e-4;
  double floor = 1e-5;
  int64_t warmup_steps = 4000;
  int64_t decay_steps = 100000;

  static LrSchedule constant(double lr) { return {lr, lr, lr, 0, 0}; }
  double at(int64_t step) const;
};

struct DiffusionTrainSettings {
  LrSchedule lr;
  double weight_decay = 1e-2;
  int64_t batch_size = 16;
  int epochs = 60;
  double grad_clip = 1.0;
  double p_drop = 0.1;  // conditional stage only
  std::uint64_t seed = 23;
  /// Selected checkpoint: last epoch whose validation loss is within this
  /// relative margin of the minimum.
  double selection_tolerance = 0.02;
};

struct DiffusionEpochLog {
  int epoch = 0;
  double train_loss = 0.0;  // NaN for epoch 0
  double val_loss = 0.0;
  double lr = 0.0;

  nlohmann::json to_json() const;
};

struct DiffusionModel {
  std::string stage = "init";  // "init", "uncond" or "cond"
  NoiseSchedule schedule = NoiseSchedule::linear();
  double scale = 1.0;
  UNet unet{nullptr};
  context::ContextEncoder context{nullptr};
  int selected_epoch = 0;
  double selected_val = 0.0;
  std::vector<DiffusionEpochLog> log;

  static DiffusionModel create(const UNetOptions& unet, const context::ContextOptions& ctx,
                               const NoiseSchedule& schedule, double scale);
  void eval();
};

/// Mean squared noise-prediction error with timesteps and noise drawn from
/// `seed` (identical draws for identical sizes). Undefined `baselines` means
/// zero-filled baseline channels; null `reports` means null context.
double denoising_loss(DiffusionModel& m, const torch::Tensor& targets, const torch::Tensor& baselines,
                      const std::vector<std::string>* reports, int64_t batch_size, std::uint64_t seed);

/// Stage 1: every training latent (both time points) against null context
/// with zero baseline channels. Trains the U-Net and the null embedding.
DiffusionModel train_unconditional(const DiffusionData& train, const DiffusionData& val, DiffusionModel model,
                                   const DiffusionTrainSettings& settings,
                                   const std::function<void(const DiffusionEpochLog&)>& on_epoch = {});

/// Stage 2: follow-up latents given baseline channels and report context;
/// context replaced by the null embedding with probability p_drop per sample.
/// Trains the U-Net and the prompt bank.
DiffusionModel train_conditional(const DiffusionData& train, const DiffusionData& val, DiffusionModel model,
                                 const DiffusionTrainSettings& settings,
                                 const std::function<void(const DiffusionEpochLog&)>& on_epoch = {});

/// Unconditional objective of `m` on follow-up latents of `data`.
double unconditional_val_loss(DiffusionModel& m, const DiffusionData& data, int64_t batch_size, std::uint64_t seed);
/// Conditional objective (no dropout) of `m` on `data`.
double conditional_val_loss(DiffusionModel& m, const DiffusionData& data, int64_t batch_size, std::uint64_t seed);

void save_diffusion(const std::filesystem::path& path, const DiffusionModel& m,
                    const nlohmann::json& extra_meta = nlohmann::json::object());
DiffusionModel load_diffusion(const std::filesystem::path& path, nlohmann::json* meta = nullptr);

/// Standard-normal z_T [1, 4, h, w] for one sample seed.
torch::Tensor initial_noise(int64_t h, int64_t w, std::uint64_t seed);

/// DDIM from z_T [B, 4, h, w] given scaled baselines and contexts [B, m, D].
torch::Tensor sample_latents(DiffusionModel& m, const torch::Tensor& baselines, const torch::Tensor& context,
                             const torch::Tensor& z_T, int64_t n_steps);

}  // namespace namd::diffusion
