#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

namespace namd::evalkit {

struct ClassifierOptions {
  int64_t base_channels = 16;
  int64_t heads = 4;
  int64_t groups = 8;
};

/// Four conv blocks (conv, GroupNorm, SiLU, 2x2 max-pool) then one residual
/// self-attention layer over the remaining grid, global average pooling and
/// a linear head. The pooled vector is the FID feature.
class ClassifierImpl : public torch::nn::Module {
 public:
  explicit ClassifierImpl(const ClassifierOptions& options = {});

  torch::Tensor features(const torch::Tensor& images);  // [B, F]
  torch::Tensor forward(const torch::Tensor& images);   // logits [B]

  const ClassifierOptions& options() const { return options_; }
  int64_t feature_width() const { return 4 * options_.base_channels; }

 private:
  ClassifierOptions options_;
  torch::nn::ModuleList convs{nullptr}, norms{nullptr};
  torch::nn::LayerNorm attn_norm{nullptr};
  torch::nn::Linear qkv{nullptr}, attn_out{nullptr}, head{nullptr};
};
TORCH_MODULE(Classifier);

/// Training inputs: real follow-up images with labels and patient ids.
struct LabeledImages {
  torch::Tensor images;  // [N, 1, H, W]
  torch::Tensor labels;  // float [N]
  std::vector<std::string> patient_ids;

  int64_t size() const { return images.defined() ? images.size(0) : 0; }
};

struct ClassifierTrainSettings {
  double lr = 1e-3;
  double weight_decay = 1e-4;
  int64_t batch_size = 32;
  int epochs = 20;
  std::uint64_t seed = 23;
};

struct TrainedClassifier {
  ClassifierOptions options;
  Classifier net{nullptr};
  int best_epoch = 0;
  double best_val_loss = 0.0;
  std::string parameter_sha256;  // stamped after training
  std::vector<nlohmann::json> log;
};

/// Trains on `train` with random quarter-turn augmentation, keeps the epoch
/// with the lowest validation BCE, freezes every parameter and stamps the
/// parameter hash. Any patient of `train` or `val` listed in `held_out`
/// raises Error("leakage").
TrainedClassifier train_classifier(const LabeledImages& train, const LabeledImages& val,
                                   const std::set<std::string>& held_out, const ClassifierOptions& options,
                                   const ClassifierTrainSettings& settings);

/// Malignancy probabilities [N] in eval mode, no gradients.
torch::Tensor predict_proba(Classifier& net, const torch::Tensor& images, int64_t chunk = 128);
/// Penultimate features [N, F] in eval mode, no gradients.
torch::Tensor extract_features(Classifier& net, const torch::Tensor& images, int64_t chunk = 128);

void save_classifier(const std::filesystem::path& path, const TrainedClassifier& c,
                     const nlohmann::json& extra_meta = nlohmann::json::object());
TrainedClassifier load_classifier(const std::filesystem::path& path);

}  // namespace namd::evalkit
