#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

#include "namd/evalkit/classifier.hpp"

namespace namd::evalkit {

/// Per-sample classifier probabilities over K generation runs.
struct RunTrace {
  std::string sample_id;
  int label = 0;
  std::vector<double> probs;
  double mean = 0.0;
  double variance = 0.0;
  double error = 0.0;  // |label - mean|

  void finalize();
};

struct RunMetrics {
  std::uint64_t seed = 0;
  double auroc = 0.0;
  double auprc = 0.0;
  double fid = 0.0;
  double perceptual = 0.0;
};

struct Aggregate {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 with std_defined=false for K = 1
};

struct MetricsReport {
  std::vector<RunMetrics> runs;
  std::map<std::string, Aggregate> aggregate;  // auroc, auprc, fid, perceptual
  bool std_defined = false;
  /// Classifier scores of real images ("real_baseline", "real_followup"): auroc, auprc.
  std::map<std::string, std::map<std::string, double>> references;
  nlohmann::json manifest = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Everything k_run_evaluate needs besides the generator.
struct EvalInputs {
  std::vector<std::string> sample_ids;
  std::vector<int> labels;
  torch::Tensor real_baseline;  // [N, 1, H, W]
  torch::Tensor real_followup;  // [N, 1, H, W]
};

struct KRunResult {
  MetricsReport report;
  std::vector<RunTrace> traces;
  torch::Tensor images;  // [K, N, 1, H, W] generated follow-ups
};

/// Produces follow-ups [N, 1, H, W] for every test record from one run seed.
using Generator = std::function<torch::Tensor(std::uint64_t seed)>;

/// Runs seeds base_seed .. base_seed + K - 1, scores every run with the
/// frozen classifier and aggregates. The classifier hash must not change.
KRunResult k_run_evaluate(const EvalInputs& inputs, const Generator& generate, Classifier& classifier, int k,
                          std::uint64_t base_seed);

/// Sample variance of probs[0..k) for k = 2 .. K.
std::vector<double> running_variance(const std::vector<double>& probs);

/// Fraction of traces whose running variance changes by less than `tolerance`
/// relative between k = k_from and k = k_to (a 0 -> 0 change counts as stable).
double stable_fraction(const std::vector<RunTrace>& traces, int k_from = 15, int k_to = 20,
                       double tolerance = 0.10);

struct ConfidenceThresholds {
  double confident_error = 0.3;
  double confident_variance = 0.01;
  double unsure_variance = 0.05;
  double incorrect_error = 0.5;

  nlohmann::json to_json() const;
};

/// "unsure" when variance >= unsure_variance; else "confidently-correct" when
/// error < confident_error and variance < confident_variance; else
/// "confidently-incorrect" when error >= incorrect_error; else "intermediate".
std::string confidence_category(double error, double variance, const ConfidenceThresholds& th);

struct VarianceAnalysis {
  std::vector<std::string> categories;  // per trace
  torch::Tensor variance_maps;          // [N, H, W] pixel variance over runs
  torch::Tensor error_maps;             // [N, H, W] mean over runs of |generated - real|
  nlohmann::json summary;               // per-label variance stats and category counts
};

VarianceAnalysis variance_analysis(const std::vector<RunTrace>& traces, const torch::Tensor& images,
                                   const torch::Tensor& real_followup, const ConfidenceThresholds& th);

/// Writes scatter.tsv, variance_summary.json and per-sample maps
/// (<id>_variance.png|.f32, <id>_error.png|.f32) under `dir`. Variance PNGs
/// store 4 x variance.
void write_variance_bundle(const std::filesystem::path& dir, const std::vector<RunTrace>& traces,
                           const VarianceAnalysis& analysis);

struct Projection {
  torch::Tensor coords;    // [N, 2]
  torch::Tensor loadings;  // [2, d]
  double best_axis_spearman = 0.0;  // max over the two axes of |Spearman(long_dia, axis)|
};

/// Two-component PCA of pooled latents [N, d]; each component is signed so
/// its largest-magnitude loading is positive.
Projection pca_projection(const torch::Tensor& pooled, const std::vector<double>& long_dia);

/// Tab-separated: sample_id, label, long_dia, z0..z{d-1}, pc1, pc2.
void write_projection(const std::filesystem::path& path, const std::vector<std::string>& ids,
                      const std::vector<int>& labels, const std::vector<double>& long_dia,
                      const torch::Tensor& pooled, const Projection& projection);

}  // namespace namd::evalkit
