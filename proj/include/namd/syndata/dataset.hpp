#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "namd/syndata/generator.hpp"
#include "namd/syndata/split.hpp"

namespace namd::syndata {

/// A generated cohort together with its patient-level split.
struct Dataset {
  GeneratorParams params;
  SplitRatios ratios;
  std::uint64_t split_seed = 0;
  std::vector<NoduleRecord> records;
  SplitAssignment splits;

  std::vector<const NoduleRecord*> subset(Split s) const;
};

Dataset make_dataset(const GeneratorParams& params, const SplitRatios& ratios,
                     std::uint64_t split_seed);

/// Directory layout:
///   images/<sample_id>_baseline.png, images/<sample_id>_followup.png (16-bit)
///   metadata.ndjson   one object per record (ids, 13 EHR fields, label, split)
///   manifest.json     seed, generator parameters, split ratios, schema_version
void save_dataset(const std::filesystem::path& dir, const Dataset& dataset);
Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace namd::syndata
