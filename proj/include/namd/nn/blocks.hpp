#pragma once

#include <torch/torch.h>

namespace namd::nn {

/// Largest group count <= preferred that divides channels.
int64_t norm_groups(int64_t channels, int64_t preferred = 8);

/// GroupNorm -> SiLU -> conv3x3, twice, with a 1x1 skip when widths differ.
/// When time_dim > 0 a projection of the timestep embedding is added after
/// the first convolution.
struct ResBlockImpl : torch::nn::Module {
  ResBlockImpl(int64_t in_channels, int64_t out_channels, int64_t time_dim = 0,
               int64_t groups = 8);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& time_embedding = {});

  torch::nn::GroupNorm norm1{nullptr}, norm2{nullptr};
  torch::nn::Conv2d conv1{nullptr}, conv2{nullptr}, skip{nullptr};
  torch::nn::Linear time_proj{nullptr};
};
TORCH_MODULE(ResBlock);

/// Stride-2 3x3 convolution.
struct DownsampleImpl : torch::nn::Module {
  explicit DownsampleImpl(int64_t channels);
  torch::Tensor forward(const torch::Tensor& x);
  torch::nn::Conv2d conv{nullptr};
};
TORCH_MODULE(Downsample);

/// Nearest-neighbour x2 followed by a 3x3 convolution.
struct UpsampleImpl : torch::nn::Module {
  explicit UpsampleImpl(int64_t channels);
  torch::Tensor forward(const torch::Tensor& x);
  torch::nn::Conv2d conv{nullptr};
};
TORCH_MODULE(Upsample);

/// Multi-head scaled dot-product attention on [B, S, C] inputs with explicit
/// projections; `mask` (broadcastable to [B, H, Sq, Sk], true = blocked) is optional.
torch::Tensor multi_head_attention(const torch::Tensor& q, const torch::Tensor& k,
                                   const torch::Tensor& v, int64_t heads,
                                   const torch::Tensor& mask = {});

/// Rotates a [B, C, H, W] batch by per-sample angles in degrees. Multiples of
/// 90 use exact index permutations; other angles bilinear resampling with
/// reflection at the border.
torch::Tensor rotate(const torch::Tensor& images, const std::vector<double>& degrees);

}  // namespace namd::nn
