#pragma once

// JSON and CSV encodings of the public value types. JSON is canonical; the
// schemas are under docs/schemas (schema version kSchemaVersion).

#include "witt/derivation.hpp"
#include "witt/diagram.hpp"
#include "witt/enumeration.hpp"
#include "witt/module.hpp"
#include "witt/twist.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace witt {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

json frame_to_json(const Frame& f);
Frame frame_from_json(const json& j);

/// {"frame":{...},"parts":[...],"weight":w}
json diagram_to_json(const PlacedDiagram& d);
PlacedDiagram diagram_from_json(const json& j);

/// Array of diagram records in set order.
json diagram_set_to_json(const DiagramSet& s);
DiagramSet diagram_set_from_json(const json& j);

/// Sorted array of symbol names.
json twist_to_json(TwistClass t);
TwistClass twist_from_json(const json& j);

/// Array of {"degree","residue","twist","provenance"}.
json module_to_json(const GradedWittModule& m);
GradedWittModule module_from_json(const json& j);

json rank_table_to_json(const RankTable& t);

/// Array of {"rule","n","shift","twist","cite"}.
json trace_to_json(const DerivationTrace& t);
DerivationTrace trace_from_json(const json& j);

/// Array of {"degree","coefficient"} in increasing degree.
json poincare_to_json(const PoincarePolynomial& p);

std::string diagram_set_to_csv(const DiagramSet& s);
std::string module_to_csv(const GradedWittModule& m);
std::string poincare_to_csv(const PoincarePolynomial& p);
std::string rect_set_to_csv(int rows, int cols, const std::set<std::vector<int>>& parts);

}  // namespace witt
