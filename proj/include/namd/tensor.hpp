#pragma once

#include <span>
#include <vector>

#include <torch/torch.h>

#include "namd/image.hpp"

namespace namd {

/// Stacks images into a float32 [N, 1, H, W] tensor.
torch::Tensor to_tensor(std::span<const Image* const> images);
torch::Tensor to_tensor(const Image& image);

/// Converts one [1, H, W] or [H, W] tensor back to an Image.
Image to_image(const torch::Tensor& t);

/// CPU generator seeded deterministically.
torch::Generator make_generator(std::uint64_t seed);

/// Fails with Error("non_finite") naming `what` when `t` holds NaN/Inf.
void check_finite(const torch::Tensor& t, const std::string& what);

}  // namespace namd
