#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "namd/autoencoder/trainer.hpp"
#include "namd/diffusion/trainer.hpp"
#include "namd/image.hpp"
#include "namd/syndata/ehr.hpp"

namespace namd::diffusion {

inline constexpr int64_t kDefaultSamplingSteps = 50;

/// Baseline image + EHR -> predicted follow-up image. Loads a VAE checkpoint
/// and a conditional diffusion checkpoint; the diffusion checkpoint must
/// record the SHA-256 of that exact VAE file ("vae_sha256"), else
/// Error("manifest").
class Predictor {
 public:
  Predictor(const std::filesystem::path& vae_checkpoint, const std::filesystem::path& diffusion_checkpoint);
  Predictor(autoencoder::TrainedVae vae, DiffusionModel model);

  /// images [B, 1, H, W]; one seed per sample seeds its z_T.
  torch::Tensor predict(const torch::Tensor& baseline_images, const std::vector<syndata::EhrRecord>& ehr,
                        const std::vector<std::uint64_t>& seeds, int64_t n_steps = kDefaultSamplingSteps);

  Image predict_followup(const Image& baseline, const syndata::EhrRecord& ehr, std::uint64_t seed,
                         int64_t n_steps = kDefaultSamplingSteps);

  autoencoder::TrainedVae& vae() { return vae_; }
  DiffusionModel& model() { return model_; }

 private:
  autoencoder::TrainedVae vae_;
  DiffusionModel model_;
};

}  // namespace namd::diffusion
