#pragma once

// JSON schemas for records, schedules and graph statistics.

#include <json.hpp>

#include "qkforge/dynamics_lab.hpp"
#include "qkforge/seqgen.hpp"

namespace qkforge {

/// {p, k, class, seed, prng, steps: [{i, coeffs, degree, kind, alternate?}], rewinds}
nlohmann::json record_to_json(const SequenceRecord& record);
/// Inverse of record_to_json; throws MalformedInput on schema errors.
SequenceRecord record_from_json(const nlohmann::json& j);

nlohmann::json schedule_to_json(const ScheduleReport& report);
nlohmann::json depth_detail_to_json(const DepthDetail& detail, const ScheduleReport& report);
nlohmann::json components_to_json(const FunctionalGraph& graph, const std::vector<ComponentStats>& stats);

}  // namespace qkforge
