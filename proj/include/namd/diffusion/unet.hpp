#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

namespace namd::diffusion {

struct UNetOptions {
  int64_t in_channels = 8;
  int64_t out_channels = 4;
  int64_t base_channels = 64;
  std::vector<int64_t> multipliers{1, 2, 4};
  int64_t heads = 4;
  int64_t context_dim = 128;
  int64_t groups = 8;

  nlohmann::json to_json() const;
  static UNetOptions from_json(const nlohmann::json& j);
};

/// Sinusoidal embedding [B, dim] of integer timesteps [B].
torch::Tensor timestep_embedding(const torch::Tensor& t, int64_t dim);

/// Residual cross-attention from spatial positions to context rows. The value
/// projection has no bias, so zero value weights make the block an identity.
class CrossAttentionImpl : public torch::nn::Module {
 public:
  CrossAttentionImpl(int64_t channels, int64_t context_dim, int64_t heads, int64_t groups);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& context);

  int64_t heads;
  torch::nn::GroupNorm norm{nullptr};
  torch::nn::Linear to_q{nullptr}, to_k{nullptr}, to_v{nullptr}, to_out{nullptr};
};
TORCH_MODULE(CrossAttention);

/// Noise predictor eps(z_t, t, C): one residual block and one cross-attention
/// layer per level on the way down, in the middle and on the way up. The final
/// convolution starts at zero.
class UNetImpl : public torch::nn::Module {
 public:
  explicit UNetImpl(const UNetOptions& options = {});

  /// x [B, in_channels, h, w] with h, w divisible by 2^(levels-1); t int64 [B]
  /// in [1, T]; context [B, m, context_dim].
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& t, const torch::Tensor& context);

  std::vector<CrossAttention> attention_layers() const;
  const UNetOptions& options() const { return options_; }

 private:
  UNetOptions options_;
  int64_t time_dim_;
  torch::nn::Sequential time_mlp{nullptr};
  torch::nn::Conv2d conv_in{nullptr}, conv_out{nullptr};
  torch::nn::GroupNorm norm_out{nullptr};
  torch::nn::ModuleList down_res{nullptr}, down_attn{nullptr}, downsample{nullptr};
  torch::nn::ModuleList up_res{nullptr}, up_attn{nullptr}, upsample{nullptr};
  torch::nn::ModuleList mid{nullptr};
};
TORCH_MODULE(UNet);

}  // namespace namd::diffusion
