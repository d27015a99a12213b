#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "namd/syndata/ehr.hpp"

namespace namd::syndata {

/// Training-split statistics for the continuous nodule fields.
struct FeatureStats {
  double long_dia_mean = 0.0;
  double long_dia_std = 1.0;
  double perp_dia_mean = 0.0;
  double perp_dia_std = 1.0;

  /// Population mean/std over `train`; must be the training split only.
  static FeatureStats fit(std::span<const EhrRecord> train);

  friend bool operator==(const FeatureStats&, const FeatureStats&) = default;
};

nlohmann::json to_json(const FeatureStats& stats);
FeatureStats feature_stats_from_json(const nlohmann::json& j);

/// Encoded nodule fields: [att one-hot(3) | loc one-hot(6) | long_dia z |
/// perp_dia z | margins one-hot(3)], each one-hot block scaled by
/// 1/sqrt(block size).
struct FeatureVector {
  std::vector<double> values;
  int schema_version = 1;
};

inline constexpr int kFeatureWidth = 14;
inline constexpr int kFeatureSchemaVersion = 1;
inline constexpr int kLongDiaCoordinate = 9;
inline constexpr int kPerpDiaCoordinate = 10;

FeatureVector encode_features(const EhrRecord& ehr, const FeatureStats& stats);

}  // namespace namd::syndata
