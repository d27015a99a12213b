#pragma once

#include <cstdint>
#include <vector>

#include <torch/torch.h>

namespace namd::autoencoder {

inline constexpr std::uint64_t kPerceptualSeed = 0x5eed1ecafULL;

/// Three-layer convolutional feature extractor with seeded random weights that
/// are never trained. Stands in for a pretrained perceptual network.
class PerceptualNetImpl : public torch::nn::Module {
 public:
  explicit PerceptualNetImpl(std::uint64_t seed = kPerceptualSeed);

  /// Activations of the three layers for [B, 1, H, W] images in [0,1].
  std::vector<torch::Tensor> features(const torch::Tensor& images);

 private:
  torch::nn::Conv2d conv1{nullptr}, conv2{nullptr}, conv3{nullptr};
};
TORCH_MODULE(PerceptualNet);

/// Mean over layers of the mean squared feature difference; scalar over the batch.
torch::Tensor perceptual_loss(PerceptualNet& net, const torch::Tensor& x, const torch::Tensor& x_hat);

/// Per-sample version, shape [B].
torch::Tensor perceptual_loss_per_sample(PerceptualNet& net, const torch::Tensor& x,
                                         const torch::Tensor& x_hat);

}  // namespace namd::autoencoder
