#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "radiolabel/bounds.hpp"
#include "radiolabel/constructive.hpp"
#include "radiolabel/solver.hpp"

namespace radiolabel {

using Json = nlohmann::ordered_json;

// Graph document:
//   { "n_vertices": 3, "edges": [[0,1],[1,2]], "roles": {"0":"center","1":"v1",...} }
// Role strings are "center", "v<i>", "w<i>", "p<i>"; "roles" is optional on
// input (all vertices Plain).
Json to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

// Labeling document: { "labels": {"0": 1, "1": 4, ...} }, plus an optional
// "positions" object mapping VertexId to gear position index. Keys must be
// exactly 0..k-1.
Json to_json(const Labeling& c, const PositionAssignment* positions = nullptr);
Labeling labeling_from_json(const Json& doc);

Json to_json(const BoundReport& report);
Json to_json(const SolveResult& result);
Json to_json(const Violation& v);

// "(u,v) d=.. gap=.. need=.."
std::string format_violation(const Violation& v);

// Graphviz undirected graph; node labels are role names, followed by the
// gear position (x<i>) and the vertex label when given.
std::string to_dot(const Graph& g, const Labeling* c = nullptr, const PositionAssignment* positions = nullptr);

// Reads a whole JSON document from a file, or from `in` when path is "-".
// Throws Io for unreadable files and Parse for malformed JSON.
Json read_json(const std::string& path, std::istream& in);

}  // namespace radiolabel
