#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include <torch/torch.h>

namespace namd::io {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Named float32 arrays plus free-form metadata.
///
/// On disk: the 8-byte magic "NAMDCKPT", a little-endian u32 format version,
/// a little-endian u64 header length, the UTF-8 JSON header
/// {"version", "tensors": [{"name", "shape", "offset"}], "meta"}, then the
/// concatenated tensor payloads as little-endian float32.
struct Checkpoint {
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::pair<std::string, torch::Tensor>> tensors;

  void add(const std::string& name, const torch::Tensor& t);
  const torch::Tensor& get(const std::string& name) const;
  bool contains(const std::string& name) const;

  /// Adds every parameter and buffer of `module` under `prefix.`.
  void add_module(const std::string& prefix, const torch::nn::Module& module);
  /// Copies `prefix.*` entries into `module`; every parameter and buffer
  /// must be present with a matching shape.
  void load_module(const std::string& prefix, torch::nn::Module& module) const;
};

/// SHA-256 over names, shapes and float32 values of every parameter and buffer.
std::string module_sha256(const torch::nn::Module& module);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace namd::io
