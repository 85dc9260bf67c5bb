#pragma once

// Human-readable renderings of the library's reports.

#include <string>
#include <vector>

#include <toricfan/charts.hpp>
#include <toricfan/deform.hpp>
#include <toricfan/validity.hpp>

namespace toricfan::cli {

std::string text_validity(const ValidityReport& report);
std::string text_classification(const Classification& cls, const ValidityReport& validity);
std::string text_atlas(const std::vector<ChartRecord>& charts, const AtlasClassification& summary);
std::string text_cocycle(const CocycleReport& report, const TopologicalFan& fan);
std::string text_oracle(const OracleReport& report, const TopologicalFan& fan);
std::string text_niceify(const NiceifyResult& result);

}  // namespace toricfan::cli
