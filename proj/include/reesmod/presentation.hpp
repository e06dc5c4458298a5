#pragma once

#include <string>

#include <json.hpp>

#include "reesmod/charts.hpp"
#include "reesmod/modification.hpp"

namespace reesmod {

using Json = nlohmann::ordered_json;

/// {base_ring, rees_vars, generator_images, relation_generators}; relation
/// generators are the reduced Gröbner basis.
Json presentation_record(const ModificationRing& m);

/// Per-chart presentations followed by the overlap checks in (i, j) order.
Json global_record(const GlobalModification& g);

Json report_record(const ValidationReport& r);

/// Indented `key: value` text for a record. Arrays of scalars print inline,
/// a "summary" key prints its bare value.
std::string render_text(const Json& record, int indent = 0);

}  // namespace reesmod
