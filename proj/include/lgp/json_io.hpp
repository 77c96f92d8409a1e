#pragma once

#include <string>

#include "json.hpp"
#include "lgp/arith.hpp"
#include "lgp/cohomology.hpp"
#include "lgp/sha.hpp"

namespace lgp::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kModelSchema = "lgp.model/1";

// Parses text; syntax errors become ParseError with line and column.
Json parse_text(const std::string& text);

// {"order", "table", "names"?} or a group name such as "z2", "s3", "q8".
GroupRef parse_group(const Json& j, const std::string& path = "group");
OrderedJson group_to_json(const FiniteGroup& g);

struct GraphDocument {
  LatticeRef lattice;
  GraphRef graph;
};

// {"fields": [{"name", "degree"?, "contains": [subfield names]}],
//  "vertices": [{"id", "kind", "field"}], "edges": [{"id", "p", "u"}]}
GraphDocument parse_graph(const Json& j);

// Graph document plus {"groups": {field: group}, "maps": [{"source",
// "target", "image"}]} where source/target are field labels.
ShaModel parse_model(const Json& j);
OrderedJson model_to_json(const ShaModel& m);

// {"entries": {edgeId: elementId}}; omitted edges default to the identity.
Cochain parse_cochain(const Json& j, const ReductionGraph& g, const std::vector<GroupRef>& edge_groups);
OrderedJson cochain_to_json(const Cochain& c, const ReductionGraph& g);

// {"classCount", "basePoint", "representatives": [cochain...]}
OrderedJson space_to_json(const DoubleCosetSpace& s, const ReductionGraph& g);

// {"module": {"orders": [...], "sigma": [[...]]}} for a cyclic group, or
// {"module": {"orders": [...], "group": group, "action": [matrix...]}}.
GModule parse_gmodule(const Json& j);

}  // namespace lgp::io
