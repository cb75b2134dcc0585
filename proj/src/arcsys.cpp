#include "slopebound/arcsys.hpp"

#include "slopebound/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace slopebound {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[x] != x)
            x = p[x] = p[p[x]];
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

std::string sid(int x) { return std::to_string(x); }

} // namespace

bool ArcModel::is_arc(int edge_id) const { return std::binary_search(arcs_.begin(), arcs_.end(), edge_id); }

int ArcModel::arc_index(int arc_id) const
{
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc_id);
    return (it != arcs_.end() && *it == arc_id) ? static_cast<int>(it - arcs_.begin()) : -1;
}

int ArcModel::arc_at(int v) const { return spec_.vertices[vidx_.at(v)].arc; }
int ArcModel::in_at(int v) const { return spec_.vertices[vidx_.at(v)].in; }
int ArcModel::out_at(int v) const { return spec_.vertices[vidx_.at(v)].out; }
int ArcModel::end(int arc, int dir) const
{
    const auto& e = spec_.edges[eidx_.at(arc)];
    return dir == 0 ? e.a : e.b;
}
int ArcModel::tail(int g) const { return spec_.edges[eidx_.at(g)].a; }
int ArcModel::head(int g) const { return spec_.edges[eidx_.at(g)].b; }

int ArcModel::circuit_of(Side s) const { return side_circuit_[2 * arc_index(s.arc) + s.dir]; }
int ArcModel::circuit_of_bedge(int g) const { return bedge_circuit_.at(g); }

bool ArcModel::all_planar() const
{
    return std::all_of(regions_.begin(), regions_.end(), [](const RegionSpec& r) { return r.genus == 0; });
}

ArcModel ArcModel::build(const ArcModelSpec& spec)
{
    ArcModel m;
    m.spec_ = spec;
    for (size_t i = 0; i < spec.vertices.size(); ++i)
        if (!m.vidx_.emplace(spec.vertices[i].id, static_cast<int>(i)).second)
            fail(ErrorKind::DuplicateId, "vertex id " + sid(spec.vertices[i].id));
    for (size_t i = 0; i < spec.edges.size(); ++i) {
        const auto& e = spec.edges[i];
        if (!m.eidx_.emplace(e.id, static_cast<int>(i)).second)
            fail(ErrorKind::DuplicateId, "edge id " + sid(e.id));
        (e.interior ? m.arcs_ : m.bedges_).push_back(e.id);
    }
    std::sort(m.arcs_.begin(), m.arcs_.end());
    std::sort(m.bedges_.begin(), m.bedges_.end());
    if (m.arcs_.empty())
        fail(ErrorKind::MalformedRibbon, "arc system is empty");

    auto edge_spec = [&](int id) -> const RibbonEdgeSpec& {
        auto it = m.eidx_.find(id);
        if (it == m.eidx_.end())
            fail(ErrorKind::DanglingEndpoint, "unknown edge " + sid(id));
        return spec.edges[it->second];
    };
    auto vertex_spec = [&](int id) -> const RibbonVertexSpec& {
        auto it = m.vidx_.find(id);
        if (it == m.vidx_.end())
            fail(ErrorKind::DanglingEndpoint, "unknown vertex " + sid(id));
        return spec.vertices[it->second];
    };
    for (const auto& e : spec.edges) {
        vertex_spec(e.a);
        vertex_spec(e.b);
    }
    for (const auto& v : spec.vertices) {
        const auto& a = edge_spec(v.arc);
        const auto& gi = edge_spec(v.in);
        const auto& go = edge_spec(v.out);
        if (!a.interior || (a.a != v.id && a.b != v.id))
            fail(ErrorKind::MalformedRibbon, "vertex " + sid(v.id) + ": arc slot is not an arc ending there");
        if (gi.interior || gi.b != v.id)
            fail(ErrorKind::MalformedRibbon, "vertex " + sid(v.id) + ": in slot is not a boundary edge ending there");
        if (go.interior || go.a != v.id)
            fail(ErrorKind::MalformedRibbon, "vertex " + sid(v.id) + ": out slot is not a boundary edge leaving there");
    }
    for (const auto& e : spec.edges) {
        const auto& va = vertex_spec(e.a);
        const auto& vb = vertex_spec(e.b);
        if (e.interior) {
            if (e.a == e.b)
                fail(ErrorKind::MalformedRibbon, "arc " + sid(e.id) + " has equal ends");
            if (va.arc != e.id || vb.arc != e.id)
                fail(ErrorKind::MalformedRibbon, "arc " + sid(e.id) + " not registered at both ends");
        } else if (va.out != e.id || vb.in != e.id) {
            fail(ErrorKind::MalformedRibbon, "boundary edge " + sid(e.id) + " not registered at tail and head");
        }
    }

    GraphSpec gs;
    for (const auto& v : spec.vertices)
        gs.vertices.push_back(v.id);
    for (const auto& e : spec.edges)
        gs.edges.push_back({e.id, e.a, e.b});
    m.graph_ = std::make_shared<const Multigraph>(Multigraph::build(gs));

    // frontier circuits
    int A = m.num_arcs();
    m.side_circuit_.assign(2 * A, -1);
    for (int k = 0; k < 2 * A; ++k) {
        if (m.side_circuit_[k] >= 0)
            continue;
        Circuit c;
        int cur = k;
        int ci = static_cast<int>(m.circuits_.size());
        while (m.side_circuit_[cur] < 0) {
            m.side_circuit_[cur] = ci;
            Side s{m.arcs_[cur / 2], cur % 2};
            c.sides.push_back(s);
            int to = m.end(s.arc, 1 - s.dir);
            int g = m.in_at(to);
            c.runs.push_back({g});
            m.bedge_circuit_[g] = ci;
            int y = m.tail(g);
            int a2 = m.arc_at(y);
            cur = 2 * m.arc_index(a2) + (m.end(a2, 0) == y ? 0 : 1);
        }
        if (cur != k)
            fail(ErrorKind::MalformedRibbon, "frontier trace did not close");
        m.circuits_.push_back(std::move(c));
    }

    // boundary circles
    std::set<int> seen;
    for (int g : m.bedges_) {
        if (seen.count(g))
            continue;
        std::vector<int> circle;
        for (int cur = g; !seen.count(cur); cur = m.out_at(m.head(cur))) {
            seen.insert(cur);
            circle.push_back(cur);
        }
        m.circles_.push_back(std::move(circle));
    }

    // regions
    m.regions_ = spec.regions;
    int nc = static_cast<int>(m.circuits_.size());
    size_t with = std::count_if(spec.regions.begin(), spec.regions.end(),
                                [](const RegionSpec& r) { return !r.circuits.empty(); });
    if (with != 0 && with != spec.regions.size())
        fail(ErrorKind::RegionMismatch, "circuit lists given for some regions only");
    int total = 0;
    for (const auto& r : spec.regions) {
        if (r.genus < 0 || r.free_boundary < 0 || r.frontier < 1)
            fail(ErrorKind::RegionMismatch, "region counts out of range");
        total += r.frontier;
    }
    if (total != nc)
        fail(ErrorKind::RegionMismatch, "regions claim " + sid(total) + " frontier circuits, tracing found " + sid(nc));
    if (with == 0) {
        int next = 0;
        for (size_t r = 0; r < spec.regions.size(); ++r)
            for (int k = 0; k < spec.regions[r].frontier; ++k)
                m.circuits_[next++].region = static_cast<int>(r);
    } else {
        for (size_t r = 0; r < spec.regions.size(); ++r) {
            const auto& reg = spec.regions[r];
            if (static_cast<int>(reg.circuits.size()) != reg.frontier)
                fail(ErrorKind::RegionMismatch, "region " + sid(static_cast<int>(r)) + " circuit list length");
            for (auto [arc, from] : reg.circuits) {
                if (!m.is_arc(arc) || (m.end(arc, 0) != from && m.end(arc, 1) != from))
                    fail(ErrorKind::RegionMismatch, "bad circuit side (" + sid(arc) + "," + sid(from) + ")");
                int ci = m.circuit_of({arc, m.end(arc, 0) == from ? 0 : 1});
                if (m.circuits_[ci].region >= 0)
                    fail(ErrorKind::RegionMismatch, "circuit through arc " + sid(arc) + " assigned twice");
                m.circuits_[ci].region = static_cast<int>(r);
            }
        }
    }

    int chiR = 0, freeR = 0;
    for (const auto& r : m.regions_) {
        chiR += r.chi();
        freeR += r.free_boundary;
    }
    m.chi_ = m.graph_->euler_char() + chiR;
    m.num_boundary_ = static_cast<int>(m.circles_.size()) + freeR;
    int twice_genus = 2 - m.chi_ - m.num_boundary_;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        fail(ErrorKind::RegionMismatch, "surface genus (2 - chi - b)/2 is not a non-negative integer");
    m.genus_ = twice_genus / 2;

    Dsu d(static_cast<int>(m.regions_.size()));
    for (int a : m.arcs_)
        d.unite(m.region_of({a, 0}), m.region_of({a, 1}));
    for (size_t r = 0; r < m.regions_.size(); ++r)
        if (d.find(static_cast<int>(r)) != 0)
            fail(ErrorKind::MalformedRibbon, "surface is disconnected");

    for (const auto& c : m.circuits_)
        if (m.regions_[c.region].disk() && c.sides.size() == 1)
            fail(ErrorKind::BoundaryParallelArc, "arc " + sid(c.sides[0].arc) + " cuts off a disk");
    return m;
}

Multigraph dual_graph(const ArcModel& m)
{
    GraphSpec s;
    for (size_t r = 0; r < m.regions().size(); ++r)
        s.vertices.push_back(static_cast<int>(r));
    for (int a : m.arcs())
        s.edges.push_back({a, m.region_of({a, 0}), m.region_of({a, 1})});
    return Multigraph::build(s);
}

void require_not_annulus(const ArcModel& m)
{
    if (m.is_annulus())
        fail(ErrorKind::HypothesisViolated, "surface is an annulus");
}

CutResult cut_regions(const ArcModel& m, const std::vector<int>& kept_arc_ids)
{
    int A = m.num_arcs();
    std::vector<char> kept(A, 0);
    for (int a : kept_arc_ids) {
        int ai = m.arc_index(a);
        if (ai < 0)
            fail(ErrorKind::DanglingEndpoint, "unknown arc " + sid(a));
        kept[ai] = 1;
    }
    int R = static_cast<int>(m.regions().size());
    Dsu d(R);
    for (int ai = 0; ai < A; ++ai)
        if (!kept[ai])
            d.unite(m.region_of({m.arcs()[ai], 0}), m.region_of({m.arcs()[ai], 1}));

    CutResult out;
    out.class_of_model_region.assign(R, -1);
    std::vector<int> cls(R, -1);
    for (int r = 0; r < R; ++r) {
        int root = d.find(r);
        if (cls[root] < 0) {
            cls[root] = static_cast<int>(out.regions.size());
            out.regions.emplace_back();
        }
        out.class_of_model_region[r] = cls[root];
        auto& cr = out.regions[cls[root]];
        cr.model_regions.push_back(r);
        cr.chi += m.regions()[r].chi();
        cr.free_boundary += m.regions()[r].free_boundary;
    }
    for (int ai = 0; ai < A; ++ai)
        if (!kept[ai])
            out.regions[out.class_of_model_region[m.region_of({m.arcs()[ai], 0})]].chi -= 1;

    auto is_kept_arc = [&](int arc) { return kept[m.arc_index(arc)] != 0; };
    std::vector<char> visited(2 * A, 0);
    for (int k = 0; k < 2 * A; ++k) {
        if (!kept[k / 2] || visited[k])
            continue;
        Circuit c;
        int cur = k;
        while (!visited[cur]) {
            visited[cur] = 1;
            Side s{m.arcs()[cur / 2], cur % 2};
            c.sides.push_back(s);
            std::vector<int> run;
            int x = m.end(s.arc, 1 - s.dir);
            int y;
            for (;;) {
                int g = m.in_at(x);
                run.push_back(g);
                y = m.tail(g);
                if (is_kept_arc(m.arc_at(y)))
                    break;
                x = y;
            }
            c.runs.push_back(std::move(run));
            int a2 = m.arc_at(y);
            cur = 2 * m.arc_index(a2) + (m.end(a2, 0) == y ? 0 : 1);
        }
        int cl = out.class_of_model_region[m.region_of(c.sides[0])];
        c.region = cl;
        out.regions[cl].circuits.push_back(std::move(c));
    }
    for (const auto& circle : m.boundary_circles()) {
        bool any = false;
        for (int g : circle)
            any = any || is_kept_arc(m.arc_at(m.tail(g)));
        if (any)
            continue;
        int cl = out.class_of_model_region[m.circuits()[m.circuit_of_bedge(circle[0])].region];
        out.regions[cl].vertex_free_circles.push_back(circle);
        out.regions[cl].free_boundary += 1;
    }
    for (auto& cr : out.regions) {
        int twice = 2 - cr.chi - static_cast<int>(cr.circuits.size()) - cr.free_boundary;
        if (twice < 0 || twice % 2 != 0)
            fail(ErrorKind::ConstructionFailed, "cut region with inconsistent genus");
        cr.genus = twice / 2;
    }
    return out;
}

std::vector<std::vector<int>> parallel_classes(const ArcModel& m)
{
    int A = m.num_arcs();
    Dsu d(A);
    for (const auto& c : m.circuits()) {
        if (!m.regions()[c.region].disk() || c.sides.size() != 2)
            continue;
        int a = m.arc_index(c.sides[0].arc), b = m.arc_index(c.sides[1].arc);
        if (a != b)
            d.unite(a, b);
    }
    std::map<int, std::vector<int>> by_root;
    for (int ai = 0; ai < A; ++ai)
        by_root[d.find(ai)].push_back(m.arcs()[ai]);
    std::vector<std::vector<int>> out;
    for (auto& [root, v] : by_root)
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Reduction reduce_system(const ArcModel& fine)
{
    auto classes = parallel_classes(fine);
    std::set<int> reps;
    std::map<int, int> width;
    std::map<int, std::vector<int>> arc_class;
    for (auto& c : classes) {
        reps.insert(c.front());
        width[c.front()] = static_cast<int>(c.size());
        arc_class[c.front()] = c;
    }
    auto cut = cut_regions(fine, std::vector<int>(reps.begin(), reps.end()));

    ArcModelSpec spec;
    std::map<int, RibbonVertexSpec> verts;
    std::map<int, BedgeChain> chain;
    for (const auto& v : fine.spec().vertices)
        if (reps.count(v.arc))
            verts[v.id] = {v.id, v.arc, -1, -1};
    for (auto& [u, vs] : verts) {
        BedgeChain ch;
        int g = fine.out_at(u);
        ch.bedges.push_back(g);
        int x = fine.head(g);
        while (!reps.count(fine.arc_at(x))) {
            ch.inner_vertices.push_back(x);
            g = fine.out_at(x);
            ch.bedges.push_back(g);
            x = fine.head(g);
        }
        int id = *std::min_element(ch.bedges.begin(), ch.bedges.end());
        spec.edges.push_back({id, false, u, x});
        vs.out = id;
        verts[x].in = id;
        chain[id] = std::move(ch);
    }
    for (int a : reps)
        spec.edges.push_back({a, true, fine.end(a, 0), fine.end(a, 1)});
    for (auto& [id, vs] : verts)
        spec.vertices.push_back(vs);
    for (const auto& cr : cut.regions) {
        RegionSpec r;
        r.genus = cr.genus;
        r.frontier = static_cast<int>(cr.circuits.size());
        r.free_boundary = cr.free_boundary;
        for (const auto& c : cr.circuits)
            r.circuits.push_back({c.sides[0].arc, fine.end(c.sides[0].arc, c.sides[0].dir)});
        spec.regions.push_back(std::move(r));
    }
    return Reduction{ArcModel::build(spec), std::move(width), std::move(arc_class), std::move(chain)};
}

Widening widen_model(const ArcModel& coarse, const std::map<int, int>& widths)
{
    int next_v = 0, next_e = 0;
    for (const auto& v : coarse.spec().vertices)
        next_v = std::max(next_v, v.id + 1);
    for (const auto& e : coarse.spec().edges)
        next_e = std::max(next_e, e.id + 1);

    auto width_of = [&](int a) {
        auto it = widths.find(a);
        int w = it == widths.end() ? 1 : it->second;
        if (w < 1)
            fail(ErrorKind::HypothesisViolated, "width of arc " + sid(a) + " below 1");
        return w;
    };

    ArcModelSpec spec;
    std::map<int, std::vector<int>> after, before;
    std::map<int, std::vector<int>> copies;  // arc -> [e_1 = e, e_2, ...]
    for (int a : coarse.arcs()) {
        int w = width_of(a);
        int v = coarse.end(a, 0), vp = coarse.end(a, 1);
        copies[a].push_back(a);
        spec.edges.push_back({a, true, v, vp});
        std::vector<int> cs, cps;
        for (int k = 2; k <= w; ++k) {
            int c = next_v++, cp = next_v++, e = next_e++;
            cs.push_back(c);
            cps.push_back(cp);
            copies[a].push_back(e);
            spec.edges.push_back({e, true, c, cp});
            spec.vertices.push_back({c, e, -1, -1});
            spec.vertices.push_back({cp, e, -1, -1});
        }
        after[v] = cs;
        before[vp] = std::vector<int>(cps.rbegin(), cps.rend());
    }
    for (const auto& v : coarse.spec().vertices)
        spec.vertices.push_back({v.id, v.arc, -1, -1});
    std::map<int, size_t> vpos;
    for (size_t i = 0; i < spec.vertices.size(); ++i)
        vpos[spec.vertices[i].id] = i;

    std::map<int, BedgeChain> chain;
    for (int g : coarse.bedges()) {
        int x = coarse.tail(g), y = coarse.head(g);
        std::vector<int> seq{x};
        for (int c : after[x])
            seq.push_back(c);
        for (int c : before[y])
            seq.push_back(c);
        seq.push_back(y);
        BedgeChain ch;
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            int id = i == 0 ? g : next_e++;
            spec.edges.push_back({id, false, seq[i], seq[i + 1]});
            spec.vertices[vpos[seq[i]]].out = id;
            spec.vertices[vpos[seq[i + 1]]].in = id;
            ch.bedges.push_back(id);
            if (i > 0)
                ch.inner_vertices.push_back(seq[i]);
        }
        chain[g] = std::move(ch);
    }

    std::map<int, std::pair<int, int>> arc_ends;
    for (const auto& e : spec.edges)
        if (e.interior)
            arc_ends[e.id] = {e.a, e.b};
    std::map<std::pair<int, int>, int> circuit_region;
    for (const auto& c : coarse.circuits()) {
        Side s = c.sides[0];
        const auto& cp = copies[s.arc];
        int arc = s.dir == 0 ? cp.back() : cp.front();
        int from = s.dir == 0 ? arc_ends[arc].first : arc_ends[arc].second;
        circuit_region[{arc, from}] = c.region;
    }
    for (size_t r = 0; r < coarse.regions().size(); ++r) {
        RegionSpec reg = coarse.regions()[r];
        reg.circuits.clear();
        for (auto& [side, rr] : circuit_region)
            if (rr == static_cast<int>(r))
                reg.circuits.push_back(side);
        spec.regions.push_back(std::move(reg));
    }
    for (int a : coarse.arcs()) {
        const auto& cp = copies[a];
        for (size_t k = 0; k + 1 < cp.size(); ++k) {
            RegionSpec rect;
            rect.circuits.push_back({cp[k], arc_ends[cp[k]].first});
            spec.regions.push_back(std::move(rect));
        }
    }
    std::map<int, int> wmap;
    for (int a : coarse.arcs())
        wmap[a] = width_of(a);
    return Widening{ArcModel::build(spec), std::move(wmap), std::move(chain)};
}

Subgraph associated_subgraph(const ArcModel& fine, const std::map<int, BedgeChain>& chain, const Subgraph& coarse)
{
    const Multigraph& fg = fine.graph();
    Subgraph s(fg);
    for (int v : coarse.vertex_ids())
        s.add_vertex_index(fg.vertex_index(v));
    for (int e : coarse.edge_ids()) {
        auto it = chain.find(e);
        if (it == chain.end()) {
            s.add_edge_index(fg.edge_index(e));
            continue;
        }
        for (int g : it->second.bedges)
            s.add_edge_index(fg.edge_index(g));
    }
    return s;
}

Subgraph widen_subgraph(const Widening& w, const Subgraph& coarse)
{
    return associated_subgraph(w.fine, w.chain, coarse);
}

std::vector<int> cyclic_reduce(std::vector<int> word)
{
    std::vector<int> st;
    for (int x : word) {
        if (!st.empty() && st.back() == -x)
            st.pop_back();
        else
            st.push_back(x);
    }
    size_t i = 0, j = st.size();
    while (j - i >= 2 && st[i] == -st[j - 1]) {
        ++i;
        --j;
    }
    return std::vector<int>(st.begin() + static_cast<long>(i), st.begin() + static_cast<long>(j));
}

bool pi1_oracle(const ArcModel& m, const Subgraph& g)
{
    const Multigraph& mg = m.graph();
    std::vector<int> kept;
    for (int a : m.arcs())
        if (g.has_edge(a))
            kept.push_back(a);
    auto letter = [&](int edge_id) { return mg.edge_index(edge_id) + 1; };
    if (kept.empty()) {
        // only boundary pieces; a whole boundary circle never bounds a disk here
        // unless the surface is a disk
        if (m.chi() == 1)
            for (const auto& circle : m.boundary_circles())
                if (std::all_of(circle.begin(), circle.end(), [&](int e) { return g.has_edge(e); }))
                    return false;
        return true;
    }
    auto cut = cut_regions(m, kept);
    for (const auto& cr : cut.regions) {
        if (!cr.disk())
            continue;
        for (const auto& c : cr.circuits) {
            bool closed = true;
            std::vector<int> word;
            for (size_t k = 0; k < c.sides.size(); ++k) {
                word.push_back(c.sides[k].dir == 0 ? letter(c.sides[k].arc) : -letter(c.sides[k].arc));
                for (int e : c.runs[k]) {
                    closed = closed && g.has_edge(e);
                    word.push_back(-letter(e));
                }
            }
            if (closed && !cyclic_reduce(word).empty())
                return false;
        }
        for (const auto& circle : cr.vertex_free_circles) {
            if (!cr.circuits.empty())
                continue;
            if (std::all_of(circle.begin(), circle.end(), [&](int e) { return g.has_edge(e); }))
                return false;
        }
    }
    return true;
}

int interior_edge_count(const ArcModel& m, const Subgraph& g)
{
    int n = 0;
    for (int a : m.arcs())
        n += g.has_edge(a) ? 1 : 0;
    return n;
}

Pi1Result pi1_subgraph(const ArcModel& m, const Subgraph& g0)
{
    require_not_annulus(m);
    if (&g0.parent() != &m.graph())
        fail(ErrorKind::HypothesisViolated, "subgraph does not belong to the model graph");
    Pi1Result res{g0, 0, 0, 0, {}};
    std::set<int> A1;
    for (int a : m.arcs())
        if (g0.has_edge(a))
            A1.insert(a);
    res.nu = static_cast<int>(A1.size());
    if (A1.empty())
        return res;

    auto disks = [&](const CutResult& cut) {
        int mu = 0;
        for (const auto& cr : cut.regions)
            mu += cr.disk() ? 1 : 0;
        return mu;
    };
    auto cut = cut_regions(m, std::vector<int>(A1.begin(), A1.end()));
    res.mu = disks(cut);
    const int invariant = res.nu - res.mu;
    for (;;) {
        int best = -1;
        for (const auto& cr : cut.regions) {
            if (!cr.disk())
                continue;
            for (const auto& c : cr.circuits)
                for (const auto& s : c.sides)
                    if (best < 0 || s.arc < best)
                        best = s.arc;
        }
        if (best < 0)
            break;
        A1.erase(best);
        res.dropped.push_back(best);
        res.sub.remove_edge_index(m.graph().edge_index(best));
        if (A1.empty())
            fail(ErrorKind::ConstructionFailed, "all arcs dropped");
        cut = cut_regions(m, std::vector<int>(A1.begin(), A1.end()));
        if (static_cast<int>(A1.size()) - disks(cut) != invariant)
            fail(ErrorKind::ConstructionFailed, "admissibility invariant broken");
    }
    res.kept_arcs = static_cast<int>(A1.size());
    if (3 * res.kept_arcs < res.nu)
        fail(ErrorKind::ConstructionFailed, "fewer than a third of the arcs kept");
    return res;
}

} // namespace slopebound
