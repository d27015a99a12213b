#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "namd/context/tokenizer.hpp"

namespace namd::context {

inline constexpr std::uint64_t kBackboneSeed = 0xbac4b0e5ULL;

struct BackboneOptions {
  int64_t vocab_size = 0;
  int64_t width = 128;
  int64_t layers = 2;
  int64_t heads = 4;
  int64_t max_positions = 96;
  std::uint64_t seed = kBackboneSeed;
};

/// Pre-norm causal transformer with sinusoidal positions and seeded random
/// weights. Every parameter is frozen.
class TextBackboneImpl : public torch::nn::Module {
 public:
  explicit TextBackboneImpl(const BackboneOptions& options);

  /// Token embeddings [B, S, D] for ids [B, S].
  torch::Tensor embed(const torch::Tensor& ids);
  /// Last-layer hidden states [B, S, D] for input embeddings [B, S, D].
  /// Position i attends to positions <= i only.
  torch::Tensor forward(const torch::Tensor& inputs);

  const BackboneOptions& options() const { return options_; }

 private:
  BackboneOptions options_;
  torch::nn::Embedding tokens{nullptr};
  torch::nn::ModuleList blocks{nullptr};
  torch::nn::LayerNorm final_norm{nullptr};
  torch::Tensor positions;
};
TORCH_MODULE(TextBackbone);

/// m prompt sets of n learnable vectors each, plus the learned m x D null
/// context used for unconditional denoising.
class SoftPromptBankImpl : public torch::nn::Module {
 public:
  SoftPromptBankImpl(int64_t sets, int64_t length, int64_t width, std::uint64_t seed);

  torch::Tensor prompts;  // [m, n, D]
  torch::Tensor null;     // [m, D]
};
TORCH_MODULE(SoftPromptBank);

/// Reports tokenized and right-padded to a common length.
struct TokenBatch {
  torch::Tensor ids;      // int64 [B, S]
  torch::Tensor lengths;  // int64 [B], including <EOS>
};

struct ContextOptions {
  int64_t sets = 4;      // m
  int64_t length = 8;    // n
  int64_t width = 128;   // D
  std::uint64_t prompt_seed = 31;
};

/// Frozen backbone plus trainable soft prompts: maps reports to C [B, m, D].
class ContextEncoderImpl : public torch::nn::Module {
 public:
  explicit ContextEncoderImpl(const ContextOptions& options = {}, Tokenizer tokenizer = {});

  TokenBatch tokenize(const std::vector<std::string>& reports) const;

  /// Row j of the result is the last-layer hidden state at the <EOS> position
  /// of [prompt set j, token embeddings].
  torch::Tensor forward(const TokenBatch& batch);
  torch::Tensor embed(const std::vector<std::string>& reports) { return forward(tokenize(reports)); }

  /// Learned null context broadcast to [B, m, D].
  torch::Tensor null_context(int64_t batch);

  const Tokenizer& tokenizer() const { return tokenizer_; }
  const ContextOptions& options() const { return options_; }

  TextBackbone backbone{nullptr};
  SoftPromptBank bank{nullptr};

 private:
  ContextOptions options_;
  Tokenizer tokenizer_;
};
TORCH_MODULE(ContextEncoder);

}  // namespace namd::context
