#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

namespace namd::pipeline {

/// Record of one completed stage, stored as stages/<stage>.json.
struct Manifest {
  std::string stage;
  nlohmann::json config = nlohmann::json::object();  // the config sections the stage reads
  std::map<std::string, std::string> inputs;         // upstream stage -> its digest
  std::map<std::string, std::string> outputs;        // path relative to the experiment root -> sha256
  std::string started;
  std::string finished;
  std::string code_version;

  /// SHA-256 over stage, config, inputs and outputs; timestamps excluded.
  std::string digest() const;

  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json& j);
};

/// Directory outputs are keyed with a trailing '/' and hashed as a tree.
std::string hash_output(const std::filesystem::path& root, const std::string& key);

void write_manifest(const std::filesystem::path& path, const Manifest& m);
Manifest read_manifest(const std::filesystem::path& path);

/// Current UTC time, ISO 8601 with seconds.
std::string utc_timestamp();
/// Short revision identifier baked in at build time, or "unknown".
std::string code_version();

}  // namespace namd::pipeline
