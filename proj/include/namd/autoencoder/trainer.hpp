#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

#include "namd/autoencoder/losses.hpp"
#include "namd/autoencoder/perceptual.hpp"
#include "namd/autoencoder/vae.hpp"

namespace namd::autoencoder {

/// Longitudinal pairs as tensors: images [N, 1, H, W] in [0,1], encoded
/// baseline nodule features [N, F], labels [N] (float 0/1).
struct PairTensors {
  torch::Tensor baseline;
  torch::Tensor followup;
  torch::Tensor features;
  torch::Tensor labels;

  int64_t size() const { return baseline.defined() ? baseline.size(0) : 0; }
};

/// One optimisation batch. `align_rows` selects the rows whose images the
/// features describe (the baseline scans); alignment runs over those rows.
struct VaeBatch {
  torch::Tensor images;
  torch::Tensor labels;
  torch::Tensor features;    // [A, F], one row per entry of align_rows
  torch::Tensor align_rows;  // int64 [A]
};

struct VaeLossTerms {
  torch::Tensor total, rec, kl, lpips, align, pred;

  std::map<std::string, double> values() const;
};

/// L_rec + lambda_kl L_KL + lambda_lpips L_LPIPS + lambda_align L_align + lambda_pred L_pred.
/// Alignment and prediction act on the pooled posterior mean.
VaeLossTerms total_vae_loss(Vae& vae, LatentProbe& probe, PerceptualNet& perceptual,
                            const VaeBatch& batch, const AlignmentConfig& cfg,
                            const torch::Tensor& noise);

struct VaeTrainSettings {
  double lr = 5e-5;
  double weight_decay = 1e-2;
  int64_t batch_size = 64;  // images; each batch holds batch_size/2 pairs
  int epochs = 60;
  double grad_clip = 1.0;
  std::vector<double> rotations{0.0, 45.0, 90.0, 135.0, 180.0};
  std::uint64_t seed = 23;
};

struct VaeEpochLog {
  int epoch = 0;  // 0 = before any update
  std::map<std::string, double> train;
  std::map<std::string, double> val;

  nlohmann::json to_json() const;
};

struct TrainedVae {
  VaeOptions options;
  Vae vae{nullptr};
  LatentProbe probe{nullptr};
  AlignmentConfig cfg;
  int best_epoch = 0;
  double best_val = 0.0;
  std::vector<VaeEpochLog> log;
};

/// Trains from scratch; both images of every pair are samples, each rotated by
/// an angle drawn from `rotations`. Keeps the parameters of the epoch with the
/// lowest validation total. Throws Error("non_finite") naming the offending term.
TrainedVae train_vae(const PairTensors& train, const PairTensors& val, AlignmentConfig cfg,
                     const VaeOptions& options, const VaeTrainSettings& settings,
                     const std::function<void(const VaeEpochLog&)>& on_epoch = {});

/// Validation terms with fixed posterior noise drawn from `seed`, no augmentation.
std::map<std::string, double> evaluate_vae(Vae& vae, LatentProbe& probe, PerceptualNet& perceptual,
                                           const PairTensors& data, const AlignmentConfig& cfg,
                                           int64_t batch_size, std::uint64_t seed);

void save_vae(const std::filesystem::path& path, const TrainedVae& model,
              const nlohmann::json& extra_meta = nlohmann::json::object());
TrainedVae load_vae(const std::filesystem::path& path);

/// Encodes [N, 1, H, W] images in eval mode without gradients, in chunks.
LatentCode encode_batched(Vae& vae, const torch::Tensor& images, int64_t chunk = 128);

}  // namespace namd::autoencoder
