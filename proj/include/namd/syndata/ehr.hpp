#pragma once

#include <array>
#include <string>
#include <string_view>

#include <json.hpp>

namespace namd::syndata {

enum class Attenuation { Soft, GroundGlass, PartSolid };
enum class Lobe { RUL, RML, RLL, LUL, LLL, Lingula };
enum class Margin { Spiculated, Smooth, PoorlyDefined };
enum class Gender { Male, Female };

inline constexpr std::array kAttenuations{Attenuation::Soft, Attenuation::GroundGlass,
                                          Attenuation::PartSolid};
inline constexpr std::array kLobes{Lobe::RUL, Lobe::RML, Lobe::RLL,
                                   Lobe::LUL, Lobe::LLL, Lobe::Lingula};
inline constexpr std::array kMargins{Margin::Spiculated, Margin::Smooth, Margin::PoorlyDefined};
inline constexpr std::array kGenders{Gender::Male, Gender::Female};

/// The 13 tabular fields of a nodule record: five nodule-level fields
/// (att, loc, long_dia, perp_dia, margins) followed by eight patient-level ones.
struct EhrRecord {
  Attenuation att = Attenuation::Soft;
  Lobe loc = Lobe::RUL;
  double long_dia = 8.0;  // mm
  double perp_dia = 6.0;  // mm
  Margin margins = Margin::Smooth;
  int age = 60;
  bool diagemph = false;
  Gender gender = Gender::Male;
  bool famfather = false;
  bool fammother = false;
  bool fambrother = false;
  bool famsister = false;
  bool famchild = false;

  bool any_family_history() const {
    return famfather || fammother || fambrother || famsister || famchild;
  }

  friend bool operator==(const EhrRecord&, const EhrRecord&) = default;
};

inline constexpr int kEhrFieldCount = 13;
inline constexpr int kNoduleFieldCount = 5;

/// Field names as they appear in the metadata file.
inline constexpr std::array<std::string_view, kEhrFieldCount> kEhrFieldNames{
    "SCT_PRE_ATT", "SCT_EPI_LOC", "SCT_LONG_DIA", "SCT_PERP_DIA", "SCT_MARGINS",
    "age",         "diagemph",    "gender",       "famfather",    "fammother",
    "fambrother",  "famsister",   "famchild"};

std::string_view to_string(Attenuation v);
std::string_view to_string(Lobe v);
std::string_view to_string(Margin v);
std::string_view to_string(Gender v);

// Parsers accept exactly the strings produced by to_string; anything else
// throws namd::Error("schema") naming `field`.
Attenuation parse_attenuation(std::string_view s, std::string_view field = "SCT_PRE_ATT");
Lobe parse_lobe(std::string_view s, std::string_view field = "SCT_EPI_LOC");
Margin parse_margin(std::string_view s, std::string_view field = "SCT_MARGINS");
Gender parse_gender(std::string_view s, std::string_view field = "gender");

/// Checks categorical membership, long_dia >= perp_dia > 0 and a sane age.
void validate(const EhrRecord& ehr);

nlohmann::json to_json(const EhrRecord& ehr);
EhrRecord ehr_from_json(const nlohmann::json& j);

}  // namespace namd::syndata
