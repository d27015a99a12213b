#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "namd/image.hpp"
#include "namd/syndata/ehr.hpp"

namespace namd::syndata {

inline constexpr int kSchemaVersion = 1;

/// Pixels per millimetre at a 64x64 crop; other crop sizes scale linearly.
inline constexpr double kPixelsPerMmAt64 = 1.5;

/// Growth of the longest diameter between baseline and follow-up is
/// log-normal: exp(N(log(median), sigma^2)).
inline constexpr double kMalignantGrowthMedian = 1.3;
inline constexpr double kMalignantGrowthSigma = 0.08;
inline constexpr double kBenignGrowthMedian = 1.0;
inline constexpr double kBenignGrowthSigma = 0.03;
/// Extra spiculation amplitude acquired by a malignant nodule at follow-up.
inline constexpr double kMalignantSpiculationGain = 0.25;

struct NoduleRecord {
  Image baseline;
  Image followup;
  EhrRecord ehr;
  int label = 0;  // 1 = malignant progression
  std::string patient_id;
  std::string sample_id;

  friend bool operator==(const NoduleRecord&, const NoduleRecord&) = default;
};

struct GeneratorParams {
  std::uint64_t seed = 0;
  int n_patients = 100;
  double malignant_fraction = 0.3;
  int image_size = 64;
};

/// Geometric and photometric description of one rendered nodule.
struct NoduleAppearance {
  double center_x = 32.0;  // px
  double center_y = 32.0;
  double long_px = 12.0;  // full axis lengths
  double perp_px = 9.0;
  double orientation = 0.0;  // radians
  double spiculation = 0.0;  // relative radial amplitude of spikes
  int spike_count = 7;
  double spike_phase = 0.0;
  double edge_blur = 0.6;  // px
  double interior = 0.85;
  double core_fraction = 0.0;  // solid core radius relative to the rim (part-solid)
  double core_intensity = 0.9;
  double texture = 0.0;  // amplitude of interior texture (ground glass)
  std::uint64_t texture_seed = 0;
};

/// Low-frequency parenchymal texture shared by the two time points of a
/// patient; each time point adds its own fine noise.
struct BackgroundField {
  double level = 0.12;
  std::vector<double> amplitude, freq_x, freq_y, phase;
  double fine_noise = 0.012;
};

BackgroundField make_background(std::uint64_t seed);

/// Renders nodule over background. Pure function of its arguments; the fine
/// noise is drawn from `noise_seed`. Output is quantized to the 16-bit grid.
Image render_nodule(const NoduleAppearance& nodule, const BackgroundField& background,
                    int image_size, std::uint64_t noise_seed);

/// Appearance implied by the EHR nodule fields at baseline.
NoduleAppearance baseline_appearance(const EhrRecord& ehr, int image_size, std::uint64_t seed);

/// Deterministic synthetic cohort. Exactly round(n_patients * malignant_fraction)
/// records are malignant; one nodule per patient.
std::vector<NoduleRecord> generate_dataset(const GeneratorParams& params);

double pixels_per_mm(int image_size);

}  // namespace namd::syndata
