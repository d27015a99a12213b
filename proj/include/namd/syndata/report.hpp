#pragma once

#include <string>
#include <string_view>

#include "namd/syndata/ehr.hpp"

namespace namd::syndata {

/// Fills the fixed screening-report template. Byte-deterministic.
///
/// The sentence after the gender is "with prior diagnosis of emphysema",
/// "with family history of cancer", both joined by "and", or omitted.
/// Only the longest diameter is rendered; it is printed with at most one
/// decimal ("27", "27.4").
std::string render_report(const EhrRecord& ehr);

/// Fields recoverable from a rendered report.
struct ParsedReport {
  int age = 0;
  Gender gender = Gender::Male;
  bool emphysema = false;
  bool family_history = false;
  Attenuation att = Attenuation::Soft;
  Margin margins = Margin::Smooth;
  double long_dia = 0.0;
  Lobe loc = Lobe::RUL;
};

/// Inverse of render_report over the template; throws Error("schema") on
/// text the template cannot produce.
ParsedReport parse_report(std::string_view report);

std::string format_diameter(double mm);

std::string_view report_phrase(Attenuation v);
std::string_view report_phrase(Lobe v);
std::string_view report_phrase(Margin v);
std::string_view report_phrase(Gender v);

}  // namespace namd::syndata
