#pragma once

#include <string>

#include <json.hpp>

#include "mediakit/convert.hpp"
#include "mediakit/families.hpp"
#include "mediakit/graph.hpp"
#include "mediakit/iso.hpp"
#include "mediakit/medium.hpp"
#include "mediakit/token_system.hpp"

namespace mediakit {

using json = nlohmann::json;

// --- parsing (InputError with the offending field on malformed data) ---

TokenSystem token_system_from_json(const json& j);
Graph graph_from_json(const json& j);
RelationFamily family_from_json(const json& j);

// Reads and parses a file; InputError names the file on failure.
json load_json_file(const std::string& path);

// --- serialization (keys sorted, arrays in canonical order) ---

json token_system_to_json(const TokenSystem& sys);
json graph_to_json(const Graph& g);
json family_to_json(const RelationFamily& f);

json medium_report_to_json(const MediumReport& rep);
json mediatic_report_to_json(const MediaticReport& rep);
json round_trip_to_json(const RoundTripReport& rep);
json classification_to_json(const CircuitClassification& c);
json theta_report_to_json(const ThetaReport& rep);
json opposite_report_to_json(const OppositeReport& rep);
json wellgraded_report_to_json(const WellgradedReport& rep);

// Undirected DOT text; on mediatic graphs each edge carries its likeness
// class index as label and a deterministic per-class color.
std::string graph_to_dot(const Graph& g);

}  // namespace mediakit
