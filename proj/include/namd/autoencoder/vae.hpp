#pragma once

#include <torch/torch.h>

#include "namd/nn/blocks.hpp"

namespace namd::autoencoder {

inline constexpr int64_t kCompression = 8;
inline constexpr int64_t kLatentChannels = 4;

/// Encoder output for a batch: posterior grids [B, 4, H/8, W/8] and the
/// pooled descriptor [B, 4] (per-channel spatial mean of `mean`).
struct LatentCode {
  torch::Tensor mean;
  torch::Tensor log_var;
  torch::Tensor sample;
  torch::Tensor pooled;
};

struct VaeOptions {
  int64_t base_channels = 32;
  int64_t latent_channels = kLatentChannels;
  int64_t groups = 8;
};

/// Convolutional VAE with three stride-2 stages (compression 8). Images enter
/// in [0,1] and are rescaled to [-1,1]; the decoder squashes back to [0,1].
class VaeImpl : public torch::nn::Module {
 public:
  explicit VaeImpl(const VaeOptions& options = {});

  /// `noise` must match the latent shape; an undefined tensor means zero noise
  /// (sample == mean).
  LatentCode encode(const torch::Tensor& images, const torch::Tensor& noise = {});
  LatentCode encode(const torch::Tensor& images, torch::Generator& gen);
  torch::Tensor decode(const torch::Tensor& latent);

  const VaeOptions& options() const { return options_; }

 private:
  void check_images(const torch::Tensor& images) const;

  VaeOptions options_;
  torch::nn::Conv2d enc_in{nullptr}, enc_out{nullptr}, dec_in{nullptr}, dec_out{nullptr};
  torch::nn::ModuleList enc_blocks{nullptr}, dec_blocks{nullptr};
  torch::nn::GroupNorm enc_norm{nullptr}, dec_norm{nullptr};
};
TORCH_MODULE(Vae);

/// Linear probe on the pooled latent; returns logits [B].
class LatentProbeImpl : public torch::nn::Module {
 public:
  explicit LatentProbeImpl(int64_t width = kLatentChannels);
  torch::Tensor forward(const torch::Tensor& pooled);

  torch::nn::Linear linear{nullptr};
};
TORCH_MODULE(LatentProbe);

}  // namespace namd::autoencoder
