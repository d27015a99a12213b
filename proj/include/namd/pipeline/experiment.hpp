#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "namd/pipeline/config.hpp"
#include "namd/pipeline/manifest.hpp"

namespace namd::pipeline {

/// Stage names in execution order.
inline const std::vector<std::string> kStages{"data", "vae", "uncond", "cond", "classifier", "sample", "evaluate"};

/// Upstream stages whose manifests must be present and intact.
const std::vector<std::string>& upstream_of(std::string_view stage);

/// CLI subcommand that produces a stage.
std::string command_for(std::string_view stage);

struct SampleOptions {
  std::optional<std::uint64_t> seed;  // default: derived from the master seed
  std::optional<std::filesystem::path> out;
  int64_t limit = 0;  // first `limit` test records; 0 = all
};

struct EvaluateOptions {
  std::optional<int> k;
  std::optional<std::uint64_t> base_seed;
  std::optional<std::filesystem::path> out;
};

struct StageResult {
  std::string stage;
  bool skipped = false;
  Manifest manifest;
};

/// One experiment directory tree:
///   config.json, stages/<stage>.json, data/, vae/, uncond/, cond/,
///   classifier/, samples/, eval/
/// A shared root supplies the data and classifier stages (ablation variants).
class Experiment {
 public:
  explicit Experiment(ExperimentConfig config, std::optional<std::filesystem::path> shared_root = {});

  const ExperimentConfig& config() const { return config_; }
  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path manifest_path(std::string_view stage) const;

  /// Runs exactly one stage. With `resume`, a stage whose manifest matches the
  /// current config, upstream digests and output hashes is skipped.
  StageResult run_stage(std::string_view stage, bool resume);
  StageResult sample(const SampleOptions& options, bool resume);
  StageResult evaluate(const EvaluateOptions& options, bool resume);

  /// data, vae, uncond, cond, classifier, sample, evaluate.
  std::vector<StageResult> run_all(bool resume);

  void set_log(std::function<void(const std::string&)> log) { log_ = std::move(log); }

 private:
  std::filesystem::path stage_root(std::string_view stage) const;
  nlohmann::json stage_config(std::string_view stage) const;
  std::map<std::string, std::string> verified_inputs(std::string_view stage) const;
  bool still_valid(std::string_view stage, const nlohmann::json& cfg,
                   const std::map<std::string, std::string>& inputs) const;
  StageResult finish(std::string_view stage, nlohmann::json cfg, std::map<std::string, std::string> inputs,
                     const std::vector<std::string>& outputs, const std::string& started);
  void log(const std::string& line) const;

  void do_data();
  void do_vae();
  void do_uncond();
  void do_cond();
  void do_classifier();
  std::vector<std::string> do_sample(const SampleOptions& options, const std::filesystem::path& out);
  std::vector<std::string> do_evaluate(int k, std::uint64_t base_seed, const std::filesystem::path& out);

  ExperimentConfig config_;
  std::filesystem::path root_;
  std::optional<std::filesystem::path> shared_root_;
  std::function<void(const std::string&)> log_;
  std::chrono::steady_clock::time_point stage_clock_;
};

/// Main tree plus <root>/ablation/unaligned with lambda_align = lambda_pred = 0,
/// sharing the data and classifier stages. Writes <root>/ablation.json and
/// returns it: both variants' metrics, deltas (aligned - unaligned) and the
/// data digests each variant consumed.
nlohmann::json run_ablation(const ExperimentConfig& config, bool resume,
                            const std::function<void(const std::string&)>& log = {});

}  // namespace namd::pipeline
