#pragma once

#include <cstdint>

#include <json.hpp>
#include <torch/torch.h>

#include "namd/autoencoder/vae.hpp"

namespace namd::autoencoder {

/// Bandwidths of the feature/latent similarity kernels and the loss weights.
/// A sigma of 0 means "not yet chosen"; the trainer then fills in the median
/// pairwise distance of the first training batch.
struct AlignmentConfig {
  double sigma_f = 0.0;
  double sigma_z = 0.0;
  double lambda_kl = 1e-6;
  double lambda_lpips = 0.5;
  double lambda_align = 0.1;
  double lambda_pred = 0.05;
};

nlohmann::json to_json(const AlignmentConfig& cfg);
AlignmentConfig alignment_config_from_json(const nlohmann::json& j);

inline constexpr double kAlignLogFloor = 1e-12;
inline constexpr double kProbabilityClamp = 1e-7;

/// Mean absolute pixel error.
torch::Tensor reconstruction_l1(const torch::Tensor& x, const torch::Tensor& x_hat);

/// KL(N(mean, exp(log_var)) || N(0, I)) summed over latent units, averaged over the batch.
torch::Tensor kl_standard_normal(const torch::Tensor& mean, const torch::Tensor& log_var);

/// Batch-mean KL between row-normalised feature and latent similarity
/// distributions (self-pairs excluded). latents [B, dz], features [B, df].
torch::Tensor alignment_loss(const torch::Tensor& latents, const torch::Tensor& features,
                             double sigma_f, double sigma_z);

/// Row-normalised similarity distribution [B, B] with a zero diagonal:
/// row i is softmax_j(-||x_j - x_i||^2 / (2 sigma^2)) over j != i.
torch::Tensor similarity_distribution(const torch::Tensor& x, double sigma);

/// Binary cross-entropy with probabilities clamped to [1e-7, 1 - 1e-7].
torch::Tensor clamped_bce(const torch::Tensor& probabilities, const torch::Tensor& labels);

/// Probe logits -> sigmoid -> clamped BCE against the malignancy labels.
torch::Tensor predictive_loss(const torch::Tensor& pooled, const torch::Tensor& labels,
                              LatentProbe& probe);

/// Median Euclidean distance over unordered pairs of rows.
double median_pairwise_distance(const torch::Tensor& rows);

}  // namespace namd::autoencoder
