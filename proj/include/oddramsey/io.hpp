#pragma once

#include <string>

#include "json.hpp"
#include "oddramsey/colored_graph.hpp"
#include "oddramsey/unique_finder.hpp"

namespace oddramsey::io {

using json = nlohmann::json;

/// {"n": int, "r": int, "edges": [{"u","v","c"}, ...]}; edges listed once with u < v.
EdgeColoring instance_from_json(const json& j);
json instance_to_json(const EdgeColoring& chi);

/// Reads an instance file; "-" reads standard input.
EdgeColoring read_instance(const std::string& path);

json walk_to_json(const Walk& w);
json census_to_json(const ParityCensus& c);

/// [{"step", "action", "color", "vertices"}, ...] in ledger order.
json trace_to_json(const std::vector<LedgerEvent>& trace);

/// Graphviz rendering with one `color`/`label` attribute per edge.
std::string to_dot(const EdgeColoring& chi);

}  // namespace oddramsey::io
