// Deterministic serialization of classification and orbit reports.

#pragma once

#include <string>
#include <vector>

#include "bavn/classify.hpp"
#include "bavn/enumerate.hpp"

namespace bavn {

enum class ReportFormat { text, json, dot };
ReportFormat parse_report_format(const std::string& name);  // throws on unknown

std::string report_render(const ClassificationReport& report, ReportFormat format);
std::string orbit_report_render(int n, const std::vector<LcOrbit>& orbits, ReportFormat format);

}  // namespace bavn
