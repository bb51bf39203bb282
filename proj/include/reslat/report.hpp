#ifndef RESLAT_REPORT_HPP
#define RESLAT_REPORT_HPP

#include <json.hpp>

#include "reslat/classify.hpp"
#include "reslat/graph.hpp"

namespace reslat {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "reslat-report/1";

// Rationals travel as exact "p" or "p/q" strings, never as floats.
Json rat_json(const Rat& q);
Json cycle_json(const ResolutionGraph& g, const IntCycle& z);
Json cycle_json(const ResolutionGraph& g, const RatCycle& z);

Json report_skeleton(const ResolutionGraph& g, const std::string& operation);

Json g12_report_json(const ResolutionGraph& g, const G12Report& rep);
Json tower_json(const ResolutionGraph& g, const CycleTower& tower);

}  // namespace reslat

#endif
