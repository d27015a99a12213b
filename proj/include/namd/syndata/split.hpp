#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "namd/syndata/generator.hpp"

namespace namd::syndata {

enum class Split { Train, Val, Test };

std::string_view to_string(Split s);
Split parse_split(std::string_view s);

struct SplitRatios {
  double train = 0.6;
  double val = 0.2;
  double test = 0.2;
};

/// Record indices per split. Patients, not records, are partitioned.
struct SplitAssignment {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;

  const std::vector<std::size_t>& operator[](Split s) const;
};

/// Shuffles the distinct patient ids with `seed` and cuts them into
/// round(n*train) / round(n*val) / remainder. Throws if any split would be empty.
SplitAssignment split_dataset(std::span<const NoduleRecord> records, const SplitRatios& ratios,
                              std::uint64_t seed);

}  // namespace namd::syndata
