#pragma once

// Machine-readable reports. Every document is a JSON object with the
// envelope {"format": "toricfan-report", "version": 1, "kind": <kind>, ...};
// exact quantities are strings, witness directions are arrays of rational
// strings, ray indices and simplices are 1-based.

#include <string>
#include <string_view>

#include "toricfan/charts.hpp"
#include "toricfan/deform.hpp"
#include "toricfan/validity.hpp"

namespace toricfan {

inline constexpr int kReportVersion = 1;

std::string emit_validity_report(const ValidityReport& report);
ValidityReport parse_validity_report(std::string_view text);

std::string emit_classification(const Classification& classification, const ValidityReport& validity);
Classification parse_classification(std::string_view text);

std::string emit_cocycle_report(const CocycleReport& report);
CocycleReport parse_cocycle_report(std::string_view text);

std::string emit_path(const DeformationPath& path);
DeformationPath parse_path(std::string_view text);

std::string emit_certificate(const RegularityCertificate& certificate);
RegularityCertificate parse_certificate(std::string_view text);

std::string emit_atlas(const std::vector<ChartRecord>& charts, const AtlasClassification& summary);
std::string emit_transition(const TransitionMap& map);
std::string emit_oracle_report(const OracleReport& report, const TopologicalFan& fan);

}  // namespace toricfan
