#pragma once

#include <span>
#include <vector>

#include <torch/torch.h>

#include "namd/autoencoder/perceptual.hpp"

namespace namd::evalkit {

/// Probability that a random positive outscores a random negative, ties 1/2.
/// Needs both classes.
double auroc(std::span<const double> scores, std::span<const int> labels);

/// Average precision: sum over distinct score thresholds (descending) of
/// precision x recall increment; tied scores enter together. Needs a positive.
double auprc(std::span<const double> scores, std::span<const int> labels);

/// Frechet distance between Gaussian fits of two feature sets [N, F]
/// (N >= 2 each). Covariances get +1e-6 on the diagonal.
double fid(const torch::Tensor& a, const torch::Tensor& b);

/// Per-pair perceptual distance [N] between image batches.
torch::Tensor perceptual_distance(autoencoder::PerceptualNet& net, const torch::Tensor& a, const torch::Tensor& b);

/// Average ranks (1-based, ties share their mean rank).
std::vector<double> average_ranks(std::span<const double> values);
/// Pearson correlation of average ranks; 0 when either side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> v);
/// Unbiased sample variance (Welford); 0 for fewer than two values.
double sample_variance(std::span<const double> v);

}  // namespace namd::evalkit
