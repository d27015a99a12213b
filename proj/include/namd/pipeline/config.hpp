#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "namd/autoencoder/losses.hpp"
#include "namd/evalkit/kruns.hpp"

namespace namd::pipeline {

struct DataConfig {
  int n_patients = 1000;
  double malignant_fraction = 0.3;
  int image_size = 64;
  double train = 0.65;
  double val = 0.10;
  double test = 0.25;
};

struct VaeConfig {
  int64_t base_channels = 32;
  int64_t groups = 8;
  double lr = 5e-5;
  double weight_decay = 1e-2;
  int64_t batch_size = 64;
  int epochs = 60;
  double grad_clip = 1.0;
  std::vector<double> rotations{0.0, 45.0, 90.0, 135.0, 180.0};
  autoencoder::AlignmentConfig alignment;
};

struct UncondConfig {
  double lr_start = 1e-6;
  double lr_peak = 1e-4;
  double lr_floor = 1e-5;
  int64_t warmup_steps = 4000;
  int64_t decay_steps = 100000;
  int64_t batch_size = 16;
  int epochs = 60;
};

struct CondConfig {
  double lr = 2e-5;
  int64_t batch_size = 8;
  int epochs = 60;
  double p_drop = 0.1;
};

struct DiffusionConfig {
  int64_t steps = 1000;
  double beta_start = 8.5e-4;
  double beta_end = 1.2e-2;
  int64_t base_channels = 64;
  std::vector<int64_t> multipliers{1, 2, 4};
  int64_t heads = 4;
  int64_t groups = 8;
  int64_t prompt_sets = 4;
  int64_t prompt_length = 8;
  int64_t context_width = 128;
  double weight_decay = 1e-2;
  double grad_clip = 1.0;
  double selection_tolerance = 0.02;
  UncondConfig uncond;
  CondConfig cond;
};

struct ClassifierConfig {
  int64_t base_channels = 16;
  int64_t heads = 4;
  double lr = 1e-3;
  double weight_decay = 1e-4;
  int64_t batch_size = 32;
  int epochs = 20;
};

struct EvaluationConfig {
  int k = 20;
  std::uint64_t base_seed = 1000;
  int64_t sampling_steps = 50;
  int stability_k_from = 15;
  int stability_k_to = 20;
  double stability_tolerance = 0.10;
  evalkit::ConfidenceThresholds thresholds;
};

/// Every hyperparameter of the experiment. Keys absent from a config file take
/// the defaults above; unknown keys are errors.
struct ExperimentConfig {
  std::uint64_t seed = 23;
  std::string output_dir = "runs/default";
  DataConfig data;
  VaeConfig vae;
  DiffusionConfig diffusion;
  ClassifierConfig classifier;
  EvaluationConfig evaluation;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  void validate() const;
};

/// Parses a JSON config file; throws Error("config") naming the offending key.
ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const ExperimentConfig& config);

}  // namespace namd::pipeline
