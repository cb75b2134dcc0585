#pragma once

#include "slopebound/arcsys.hpp"
#include "slopebound/bounds.hpp"
#include "slopebound/dvr.hpp"
#include "slopebound/graph.hpp"
#include "slopebound/norms.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <string>

namespace slopebound {

using json = nlohmann::ordered_json;

// Inline JSON text (starting with '{' or '[') or a file path.
json read_json_arg(const std::string& arg);
void write_json_file(const std::string& path, const json& j);

// {"vertices":[ids], "edges":[[a,b] | [a]], "edge_ids":[...] optional}.
// Without "edge_ids" edge ids are positions; without "vertices" they are the endpoints.
Multigraph graph_from_json(const json& j);
json graph_to_json(const Multigraph& g);
json subgraph_to_json(const Subgraph& s);

// {"vertices":[{"id":v,"ends":[arc,in,out]}],
//  "edges":[{"id":e,"kind":"interior"|"boundary","ends":[a,b]}],
//  "regions":[{"genus":g,"frontier":b,"free_boundary":p,"circuits":[[arc,vertex]]}]}
ArcModelSpec arcmodel_from_json(const json& j);
json arcmodel_to_json(const ArcModelSpec& s);

// {"arc": label, ...} or [[arc, label], ...]
std::map<int, int> int_map_from_json(const json& j);
json int_map_to_json(const std::map<int, int>& m);
std::set<int> id_set_from_json(const json& j);

Rat rat_from_json(const json& j);  // integer or "n/d" string

// p-adic: "n/d" or integer; function field: {"num":[c0,c1,..],"den":[..]} or a constant.
Elem elem_from_json(const json& j, const Field& f);
json elem_to_json(const Elem& x);
// [[a,b],[c,d]] or {"matrix":[[a,b],[c,d]]}
Mat2 matrix_from_json(const json& j, const Field& f);
json matrix_to_json(const Mat2& m);

HomologyClass class_from_json(const json& j);  // [p, q]
Vec2 vec_from_json(const json& j);             // [x, y], rational entries
json class_to_json(const HomologyClass& c);
json vec_to_json(const Vec2& v);

json report_to_json(const BoundReport& r);

} // namespace slopebound
