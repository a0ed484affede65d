#pragma once

#include <json.hpp>

#include "pdg/divisibility.hpp"
#include "pdg/perfection.hpp"
#include "pdg/verify.hpp"

namespace pdg {

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const WeightFunction& w);
nlohmann::json to_json(const PerfectionVerdict& v);
nlohmann::json to_json(const Division& d);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const SuiteConfig& c);

}  // namespace pdg
