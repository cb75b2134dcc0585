#include "slopebound/graph.hpp"

#include "slopebound/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace slopebound {

Multigraph Multigraph::build(const GraphSpec& spec)
{
    Multigraph g;
    g.vertex_ids_ = spec.vertices;
    std::sort(g.vertex_ids_.begin(), g.vertex_ids_.end());
    for (size_t i = 0; i < g.vertex_ids_.size(); ++i) {
        if (g.vertex_ids_[i] < 0)
            fail(ErrorKind::DuplicateId, "negative vertex id " + std::to_string(g.vertex_ids_[i]));
        if (i > 0 && g.vertex_ids_[i] == g.vertex_ids_[i - 1])
            fail(ErrorKind::DuplicateId, "vertex id " + std::to_string(g.vertex_ids_[i]));
    }
    g.edges_ = spec.edges;
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
    for (size_t i = 1; i < g.edges_.size(); ++i)
        if (g.edges_[i].id == g.edges_[i - 1].id)
            fail(ErrorKind::DuplicateId, "edge id " + std::to_string(g.edges_[i].id));

    int n = g.num_vertices();
    g.incident_.assign(n, {});
    g.valence_.assign(n, 0);
    g.ea_.resize(g.edges_.size());
    g.eb_.resize(g.edges_.size());
    for (size_t ei = 0; ei < g.edges_.size(); ++ei) {
        const Edge& e = g.edges_[ei];
        int ia = g.vertex_index(e.a), ib = g.vertex_index(e.b);
        if (ia < 0 || ib < 0)
            fail(ErrorKind::DanglingEndpoint,
                 "edge " + std::to_string(e.id) + " references unknown vertex " + std::to_string(ia < 0 ? e.a : e.b));
        g.ea_[ei] = ia;
        g.eb_[ei] = ib;
        g.incident_[ia].push_back(static_cast<int>(ei));
        if (ib != ia)
            g.incident_[ib].push_back(static_cast<int>(ei));
        g.valence_[ia] += 1;
        g.valence_[ib] += 1;
    }
    return g;
}

int Multigraph::vertex_index(int id) const
{
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end() || *it != id)
        return -1;
    return static_cast<int>(it - vertex_ids_.begin());
}

int Multigraph::edge_index(int id) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, int x) { return e.id < x; });
    if (it == edges_.end() || it->id != id)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

const Edge& Multigraph::edge(int id) const
{
    int ei = edge_index(id);
    if (ei < 0)
        fail(ErrorKind::DanglingEndpoint, "unknown edge id " + std::to_string(id));
    return edges_[ei];
}

Subgraph::Subgraph(const Multigraph& g)
    : g_(&g), vmask_(g.num_vertices(), 0), emask_(g.num_edges(), 0) {}

Subgraph Subgraph::full(const Multigraph& g)
{
    Subgraph s(g);
    std::fill(s.vmask_.begin(), s.vmask_.end(), 1);
    std::fill(s.emask_.begin(), s.emask_.end(), 1);
    return s;
}

Subgraph Subgraph::from_ids(const Multigraph& g, const std::vector<int>& vertex_ids, const std::vector<int>& edge_ids)
{
    Subgraph s(g);
    for (int v : vertex_ids) {
        int vi = g.vertex_index(v);
        if (vi < 0)
            fail(ErrorKind::DanglingEndpoint, "subgraph vertex " + std::to_string(v) + " not in parent");
        s.vmask_[vi] = 1;
    }
    for (int e : edge_ids) {
        int ei = g.edge_index(e);
        if (ei < 0)
            fail(ErrorKind::DanglingEndpoint, "subgraph edge " + std::to_string(e) + " not in parent");
        s.emask_[ei] = 1;
    }
    if (!s.is_valid())
        fail(ErrorKind::DanglingEndpoint, "subgraph edge with an endpoint outside the subgraph");
    return s;
}

Subgraph Subgraph::from_edge_ids(const Multigraph& g, const std::vector<int>& edge_ids)
{
    Subgraph s(g);
    for (int e : edge_ids) {
        int ei = g.edge_index(e);
        if (ei < 0)
            fail(ErrorKind::DanglingEndpoint, "subgraph edge " + std::to_string(e) + " not in parent");
        s.add_edge_index(ei);
    }
    return s;
}

bool Subgraph::has_vertex(int id) const
{
    int vi = g_->vertex_index(id);
    return vi >= 0 && vmask_[vi];
}

bool Subgraph::has_edge(int id) const
{
    int ei = g_->edge_index(id);
    return ei >= 0 && emask_[ei];
}

void Subgraph::add_edge_index(int ei)
{
    emask_[ei] = 1;
    vmask_[g_->endpoint_index(ei, 0)] = 1;
    vmask_[g_->endpoint_index(ei, 1)] = 1;
}

int Subgraph::num_vertices() const { return static_cast<int>(std::count(vmask_.begin(), vmask_.end(), 1)); }
int Subgraph::num_edges() const { return static_cast<int>(std::count(emask_.begin(), emask_.end(), 1)); }

int Subgraph::valence_index(int vi) const
{
    int val = 0;
    for (int ei : g_->incident(vi))
        if (emask_[ei])
            val += g_->edges()[ei].loop() ? 2 : 1;
    return val;
}

std::vector<int> Subgraph::vertex_ids() const
{
    std::vector<int> out;
    for (size_t i = 0; i < vmask_.size(); ++i)
        if (vmask_[i])
            out.push_back(g_->vertex_ids()[i]);
    return out;
}

std::vector<int> Subgraph::edge_ids() const
{
    std::vector<int> out;
    for (size_t i = 0; i < emask_.size(); ++i)
        if (emask_[i])
            out.push_back(g_->edges()[i].id);
    return out;
}

std::vector<int> Subgraph::vertex_indices() const
{
    std::vector<int> out;
    for (size_t i = 0; i < vmask_.size(); ++i)
        if (vmask_[i])
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Subgraph::edge_indices() const
{
    std::vector<int> out;
    for (size_t i = 0; i < emask_.size(); ++i)
        if (emask_[i])
            out.push_back(static_cast<int>(i));
    return out;
}

bool Subgraph::is_valid() const
{
    for (size_t ei = 0; ei < emask_.size(); ++ei)
        if (emask_[ei] && (!vmask_[g_->endpoint_index(ei, 0)] || !vmask_[g_->endpoint_index(ei, 1)]))
            return false;
    return true;
}

bool Subgraph::subset_of(const Subgraph& o) const
{
    for (size_t i = 0; i < vmask_.size(); ++i)
        if (vmask_[i] && !o.vmask_[i])
            return false;
    for (size_t i = 0; i < emask_.size(); ++i)
        if (emask_[i] && !o.emask_[i])
            return false;
    return true;
}

Subgraph Subgraph::unite(const Subgraph& o) const
{
    Subgraph r = *this;
    for (size_t i = 0; i < vmask_.size(); ++i)
        r.vmask_[i] |= o.vmask_[i];
    for (size_t i = 0; i < emask_.size(); ++i)
        r.emask_[i] |= o.emask_[i];
    return r;
}

Multigraph Subgraph::to_graph() const
{
    GraphSpec spec;
    spec.vertices = vertex_ids();
    for (int ei : edge_indices())
        spec.edges.push_back(g_->edges()[ei]);
    return Multigraph::build(spec);
}

int euler_char(const Multigraph& g) { return g.euler_char(); }
int euler_char(const Subgraph& s) { return s.euler_char(); }

Subgraph neighborhood(const Multigraph& g, const Subgraph& seed, int r)
{
    Subgraph cur = seed;
    for (int step = 0; step < r; ++step) {
        Subgraph next = cur;
        for (int vi : cur.vertex_indices())
            for (int ei : g.incident(vi))
                next.add_edge_index(ei);
        if (next == cur)
            break;
        cur = std::move(next);
    }
    return cur;
}

Subgraph ball(const Multigraph& g, int vertex_id, int r)
{
    Subgraph s(g);
    int vi = g.vertex_index(vertex_id);
    if (vi < 0)
        fail(ErrorKind::DanglingEndpoint, "unknown vertex " + std::to_string(vertex_id));
    s.add_vertex_index(vi);
    return neighborhood(g, s, r);
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            p[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<int> component_labels(const Subgraph& s, int* count)
{
    const Multigraph& g = s.parent();
    Dsu d(g.num_vertices());
    for (int ei : s.edge_indices())
        d.unite(g.endpoint_index(ei, 0), g.endpoint_index(ei, 1));
    std::vector<int> label(g.num_vertices(), -1);
    std::vector<int> root_label(g.num_vertices(), -1);
    int c = 0;
    for (int vi = 0; vi < g.num_vertices(); ++vi) {
        if (!s.has_vertex_index(vi))
            continue;
        int r = d.find(vi);
        if (root_label[r] < 0)
            root_label[r] = c++;
        label[vi] = root_label[r];
    }
    if (count)
        *count = c;
    return label;
}

ComponentsAndBetti components_and_betti(const Subgraph& s)
{
    const Multigraph& g = s.parent();
    int c = 0;
    auto label = component_labels(s, &c);
    ComponentsAndBetti out;
    out.count = c;
    out.components.resize(c);
    for (int vi = 0; vi < g.num_vertices(); ++vi)
        if (label[vi] >= 0)
            out.components[label[vi]].vertex_ids.push_back(g.vertex_ids()[vi]);
    for (int ei : s.edge_indices())
        out.components[label[g.endpoint_index(ei, 0)]].edge_ids.push_back(g.edges()[ei].id);
    for (auto& comp : out.components)
        comp.betti = static_cast<int>(comp.edge_ids.size()) - static_cast<int>(comp.vertex_ids.size()) + 1;
    return out;
}

ComponentsAndBetti components_and_betti(const Multigraph& g) { return components_and_betti(Subgraph::full(g)); }

int ComponentsAndBetti::total_betti() const
{
    int b = 0;
    for (auto& c : components)
        b += c.betti;
    return b;
}

bool is_connected(const Subgraph& s)
{
    int c = 0;
    component_labels(s, &c);
    return c == 1;
}

} // namespace slopebound
