#include "slopebound/json_io.hpp"

#include "slopebound/errors.hpp"

#include <fstream>
#include <sstream>

namespace slopebound {

json read_json_arg(const std::string& arg)
{
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
        std::ifstream in(arg);
        if (!in)
            fail(ErrorKind::Usage, "cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Usage, std::string("bad JSON: ") + e.what());
    }
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        fail(ErrorKind::Usage, "cannot write " + path);
    out << j.dump(2) << "\n";
}

namespace {

int as_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        fail(ErrorKind::Usage, std::string(what) + " must be an integer");
    return j.get<int>();
}

const json& field_of(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        fail(ErrorKind::Usage, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

Multigraph graph_from_json(const json& j)
{
    GraphSpec spec;
    const json& edges = field_of(j, "edges");
    if (!edges.is_array())
        fail(ErrorKind::Usage, "edges must be an array");
    std::vector<int> ids;
    if (j.contains("edge_ids"))
        for (const auto& x : j.at("edge_ids"))
            ids.push_back(as_int(x, "edge id"));
    if (!ids.empty() && ids.size() != edges.size())
        fail(ErrorKind::Usage, "edge_ids length differs from edges");
    std::set<int> seen_v;
    for (size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        if (!e.is_array() || e.empty() || e.size() > 2)
            fail(ErrorKind::Usage, "edge must list one or two endpoints");
        int a = as_int(e[0], "endpoint");
        int b = e.size() == 2 ? as_int(e[1], "endpoint") : a;
        spec.edges.push_back({ids.empty() ? static_cast<int>(i) : ids[i], a, b});
        seen_v.insert(a);
        seen_v.insert(b);
    }
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices"))
            spec.vertices.push_back(as_int(v, "vertex id"));
    else
        spec.vertices.assign(seen_v.begin(), seen_v.end());
    return Multigraph::build(spec);
}

json graph_to_json(const Multigraph& g)
{
    json j;
    j["vertices"] = g.vertex_ids();
    json edges = json::array(), ids = json::array();
    bool implicit = true;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        edges.push_back(e.loop() ? json::array({e.a}) : json::array({e.a, e.b}));
        ids.push_back(e.id);
        implicit = implicit && e.id == static_cast<int>(i);
    }
    j["edges"] = edges;
    if (!implicit)
        j["edge_ids"] = ids;
    return j;
}

json subgraph_to_json(const Subgraph& s) { return graph_to_json(s.to_graph()); }

ArcModelSpec arcmodel_from_json(const json& j)
{
    ArcModelSpec s;
    for (const auto& v : field_of(j, "vertices")) {
        const json& ends = field_of(v, "ends");
        if (!ends.is_array() || ends.size() != 3)
            fail(ErrorKind::Usage, "vertex ends must be [arc, in, out]");
        s.vertices.push_back({as_int(field_of(v, "id"), "vertex id"), as_int(ends[0], "arc"), as_int(ends[1], "in"),
                              as_int(ends[2], "out")});
    }
    for (const auto& e : field_of(j, "edges")) {
        std::string kind = field_of(e, "kind").get<std::string>();
        if (kind != "interior" && kind != "boundary")
            fail(ErrorKind::Usage, "edge kind must be interior or boundary");
        const json& ends = field_of(e, "ends");
        if (!ends.is_array() || ends.size() != 2)
            fail(ErrorKind::Usage, "edge ends must be a pair");
        s.edges.push_back(
            {as_int(field_of(e, "id"), "edge id"), kind == "interior", as_int(ends[0], "end"), as_int(ends[1], "end")});
    }
    if (j.contains("regions"))
        for (const auto& r : j.at("regions")) {
            RegionSpec rs;
            rs.genus = r.value("genus", 0);
            rs.frontier = r.value("frontier", 1);
            rs.free_boundary = r.value("free_boundary", 0);
            if (r.contains("circuits"))
                for (const auto& c : r.at("circuits")) {
                    if (!c.is_array() || c.size() != 2)
                        fail(ErrorKind::Usage, "circuit must be [arc, vertex]");
                    rs.circuits.push_back({as_int(c[0], "arc"), as_int(c[1], "vertex")});
                }
            s.regions.push_back(rs);
        }
    return s;
}

json arcmodel_to_json(const ArcModelSpec& s)
{
    json j;
    j["vertices"] = json::array();
    for (const auto& v : s.vertices)
        j["vertices"].push_back({{"id", v.id}, {"ends", {v.arc, v.in, v.out}}});
    j["edges"] = json::array();
    for (const auto& e : s.edges)
        j["edges"].push_back({{"id", e.id}, {"kind", e.interior ? "interior" : "boundary"}, {"ends", {e.a, e.b}}});
    j["regions"] = json::array();
    for (const auto& r : s.regions) {
        json jr{{"genus", r.genus}, {"frontier", r.frontier}, {"free_boundary", r.free_boundary}};
        if (!r.circuits.empty()) {
            jr["circuits"] = json::array();
            for (auto [a, v] : r.circuits)
                jr["circuits"].push_back({a, v});
        }
        j["regions"].push_back(jr);
    }
    return j;
}

std::map<int, int> int_map_from_json(const json& j)
{
    std::map<int, int> m;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            try {
                m[std::stoi(k)] = as_int(v, "value");
            } catch (const std::logic_error&) {
                fail(ErrorKind::Usage, "bad key " + k);
            }
        }
    } else if (j.is_array()) {
        for (const auto& p : j) {
            if (!p.is_array() || p.size() != 2)
                fail(ErrorKind::Usage, "expected [key, value] pairs");
            m[as_int(p[0], "key")] = as_int(p[1], "value");
        }
    } else {
        fail(ErrorKind::Usage, "expected an object or a list of pairs");
    }
    return m;
}

json int_map_to_json(const std::map<int, int>& m)
{
    json j = json::object();
    for (auto [k, v] : m)
        j[std::to_string(k)] = v;
    return j;
}

std::set<int> id_set_from_json(const json& j)
{
    std::set<int> s;
    if (!j.is_array())
        fail(ErrorKind::Usage, "expected a list of ids");
    for (const auto& x : j)
        s.insert(as_int(x, "id"));
    return s;
}

Rat rat_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    fail(ErrorKind::Usage, "expected an integer or \"n/d\" string");
}

namespace {

Poly poly_from_json(const json& j)
{
    if (!j.is_array())
        fail(ErrorKind::Usage, "coefficients must be a list");
    std::vector<Rat> c;
    for (const auto& x : j)
        c.push_back(rat_from_json(x));
    return Poly(c);
}

json poly_to_json(const Poly& p)
{
    json j = json::array();
    for (const auto& c : p.c)
        j.push_back(to_string(c));
    return j;
}

} // namespace

Elem elem_from_json(const json& j, const Field& f)
{
    Elem x = j.is_object() ? Elem(poly_from_json(field_of(j, "num")),
                                  j.contains("den") ? poly_from_json(j.at("den")) : Poly::constant(1))
                           : Elem(rat_from_json(j));
    f.check(x);
    return x;
}

json elem_to_json(const Elem& x)
{
    if (x.is_constant())
        return to_string(x.constant());
    return {{"num", poly_to_json(x.num())}, {"den", poly_to_json(x.den())}};
}

Mat2 matrix_from_json(const json& j, const Field& f)
{
    const json& m = j.is_object() ? field_of(j, "matrix") : j;
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
        m[1].size() != 2)
        fail(ErrorKind::Usage, "matrix must be [[a,b],[c,d]]");
    return {elem_from_json(m[0][0], f), elem_from_json(m[0][1], f), elem_from_json(m[1][0], f),
            elem_from_json(m[1][1], f)};
}

json matrix_to_json(const Mat2& m)
{
    return json::array({json::array({elem_to_json(m.a), elem_to_json(m.b)}),
                        json::array({elem_to_json(m.c), elem_to_json(m.d)})});
}

HomologyClass class_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        fail(ErrorKind::Usage, "class must be [p, q]");
    Rat p = rat_from_json(j[0]), q = rat_from_json(j[1]);
    if (den(p) != 1 || den(q) != 1)
        fail(ErrorKind::Usage, "class coordinates must be integers");
    return {num(p), num(q)};
}

Vec2 vec_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        fail(ErrorKind::Usage, "vector must be [x, y]");
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

json class_to_json(const HomologyClass& c) { return json::array({to_string(c.p), to_string(c.q)}); }
json vec_to_json(const Vec2& v) { return json::array({to_string(v.x), to_string(v.y)}); }

json report_to_json(const BoundReport& r)
{
    json j{{"name", r.name},     {"lhs", r.lhs},     {"rhs", r.rhs},
           {"margin", r.margin}, {"status", status_name(r.status)}, {"exact", r.exact}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

} // namespace slopebound
