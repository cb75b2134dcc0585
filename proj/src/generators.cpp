#include "slopebound/generators.hpp"

#include "slopebound/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace slopebound {

namespace {

bool connected_spec(const GraphSpec& s)
{
    return is_connected(Subgraph::full(Multigraph::build(s)));
}

// Cyclic frontier tracing on a bare ribbon, same rule as ArcModel::build.
std::vector<std::vector<Side>> trace_sides(const ArcModelSpec& s, std::map<int, int>& side_circuit)
{
    std::map<int, RibbonVertexSpec> V;
    for (const auto& v : s.vertices)
        V[v.id] = v;
    std::map<int, RibbonEdgeSpec> E;
    for (const auto& e : s.edges)
        E[e.id] = e;
    std::vector<std::vector<Side>> out;
    side_circuit.clear();
    for (const auto& [id, e] : E) {
        if (!e.interior)
            continue;
        for (int dir = 0; dir < 2; ++dir) {
            if (side_circuit.count(2 * id + dir))
                continue;
            std::vector<Side> c;
            int arc = id, d = dir;
            while (!side_circuit.count(2 * arc + d)) {
                side_circuit[2 * arc + d] = static_cast<int>(out.size());
                c.push_back({arc, d});
                int to = d == 0 ? E[arc].b : E[arc].a;
                int y = E[V[to].in].a;
                arc = V[y].arc;
                d = E[arc].a == y ? 0 : 1;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace

Multigraph random_min_valence3(Rng& rng, int V, int extra)
{
    if (V < 1 || V > 200)
        fail(ErrorKind::CapExceeded, "vertex count outside 1..200");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> deg(V, 3);
        if ((3 * V) % 2 != 0)
            deg[rng.uniform_int(0, V - 1)] += 1;
        std::vector<int> halves;
        for (int v = 0; v < V; ++v)
            for (int k = 0; k < deg[v]; ++k)
                halves.push_back(v);
        rng.shuffle(halves);
        GraphSpec s;
        for (int v = 0; v < V; ++v)
            s.vertices.push_back(v);
        int id = 0;
        for (size_t i = 0; i + 1 < halves.size(); i += 2)
            s.edges.push_back({id++, halves[i], halves[i + 1]});
        for (int k = 0; k < extra; ++k)
            s.edges.push_back({id++, rng.uniform_int(0, V - 1), rng.uniform_int(0, V - 1)});
        if (connected_spec(s))
            return Multigraph::build(s);
    }
    fail(ErrorKind::ConstructionFailed, "could not sample a connected graph");
}

Multigraph random_general_graph(Rng& rng, int max_components)
{
    GraphSpec s;
    int next_v = 0, next_e = 0;
    int chi = 0;
    int comps = rng.uniform_int(1, std::max(1, max_components));
    for (int c = 0; c < comps || chi >= 0; ++c) {
        if (c > 0 && chi < 0 && rng.coin(1, 3)) {
            // a single cycle component (chi 0)
            int len = rng.uniform_int(1, 5);
            int first = next_v;
            for (int k = 0; k < len; ++k)
                s.vertices.push_back(next_v++);
            for (int k = 0; k < len; ++k)
                s.edges.push_back({next_e++, first + k, first + (k + 1) % len});
            continue;
        }
        int V = rng.uniform_int(1, 8);
        GraphSpec core;
        if (V == 1) {
            core.vertices = {0};
            core.edges = {{0, 0, 0}, {1, 0, 0}};
        } else {
            core = random_min_valence3(rng, V, rng.uniform_int(0, 2)).spec();
        }
        int base = next_v;
        for (int v : core.vertices)
            s.vertices.push_back(base + v);
        next_v += static_cast<int>(core.vertices.size());
        chi += static_cast<int>(core.vertices.size()) - static_cast<int>(core.edges.size());
        for (const auto& e : core.edges) {
            int sub = rng.coin(1, 2) ? rng.uniform_int(1, 4) : 0;
            int prev = base + e.a;
            for (int k = 0; k < sub; ++k) {
                s.vertices.push_back(next_v);
                s.edges.push_back({next_e++, prev, next_v});
                prev = next_v++;
            }
            s.edges.push_back({next_e++, prev, base + e.b});
        }
        // hanging trees at random component vertices
        int trees = rng.coin(1, 3) ? rng.uniform_int(1, 2) : 0;
        int hi = next_v - 1;
        for (int t = 0; t < trees; ++t) {
            int at = rng.uniform_int(base, hi);
            int len = rng.uniform_int(1, 3);
            for (int k = 0; k < len; ++k) {
                s.vertices.push_back(next_v);
                s.edges.push_back({next_e++, at, next_v});
                at = next_v++;
            }
        }
    }
    return Multigraph::build(s);
}

ArcModel random_arc_model(Rng& rng, const ArcModelParams& p)
{
    if (p.theta < 1 || p.theta > 400)
        fail(ErrorKind::CapExceeded, "theta outside 1..400");
    for (int attempt = 0; attempt < 20000; ++attempt) {
        const int n = 2 * p.theta;
        int circles = rng.uniform_int(1, std::max(1, std::min(p.max_circles, n)));
        // cut the cyclic order 0..n-1 into `circles` non-empty blocks
        std::vector<int> cuts(n - 1);
        std::iota(cuts.begin(), cuts.end(), 1);
        rng.shuffle(cuts);
        cuts.resize(circles - 1);
        cuts.push_back(0);
        cuts.push_back(n);
        std::sort(cuts.begin(), cuts.end());

        ArcModelSpec s;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<RibbonVertexSpec> verts(n);
        for (int v = 0; v < n; ++v)
            verts[v].id = v;
        for (int k = 0; k < p.theta; ++k) {
            int a = perm[2 * k], b = perm[2 * k + 1];
            s.edges.push_back({k, true, a, b});
            verts[a].arc = verts[b].arc = k;
        }
        int bid = p.theta;
        for (size_t c = 0; c + 1 < cuts.size(); ++c) {
            int lo = cuts[c], hi = cuts[c + 1];
            for (int v = lo; v < hi; ++v) {
                int w = v + 1 < hi ? v + 1 : lo;
                s.edges.push_back({bid, false, v, w});
                verts[v].out = bid;
                verts[w].in = bid;
                ++bid;
            }
        }
        s.vertices = verts;

        std::map<int, int> side_circuit;
        auto circ = trace_sides(s, side_circuit);
        int nc = static_cast<int>(circ.size());
        int R = rng.uniform_int(1, std::max(1, std::min(p.max_regions, nc)));
        std::vector<int> order(nc);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        std::vector<std::vector<int>> groups(R);
        for (int i = 0; i < nc; ++i)
            groups[i < R ? i : rng.uniform_int(0, R - 1)].push_back(order[i]);
        for (auto& g : groups) {
            RegionSpec r;
            r.genus = (!p.planar && rng.coin(1, 5)) ? 1 : 0;
            r.free_boundary = rng.coin(1, 6) ? 1 : 0;
            r.frontier = static_cast<int>(g.size());
            if (r.disk() && circ[g[0]].size() <= 2)
                r.free_boundary = 1;
            for (int ci : g) {
                const Side& sd = circ[ci][0];
                const auto& e = s.edges[sd.arc];
                r.circuits.push_back({sd.arc, sd.dir == 0 ? e.a : e.b});
            }
            s.regions.push_back(std::move(r));
        }
        try {
            ArcModel m = ArcModel::build(s);
            if (m.is_annulus())
                continue;
            return m;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MalformedRibbon)
                throw;
        }
    }
    fail(ErrorKind::ConstructionFailed, "could not sample an arc model");
}

std::map<int, int> random_widths(Rng& rng, const ArcModel& m, int max_width)
{
    std::map<int, int> w;
    for (int a : m.arcs())
        w[a] = rng.uniform_int(1, max_width);
    return w;
}

LabeledInstance random_labels(Rng& rng, const std::vector<int>& arcs, const Rat& q, int max_labels,
                              bool with_excluded)
{
    LabeledInstance out;
    int n = static_cast<int>(arcs.size());
    int k = rng.uniform_int(1, std::max(1, std::min(max_labels, n)));
    std::vector<int> order = arcs;
    rng.shuffle(order);
    std::map<int, std::vector<int>> by_label;
    for (int i = 0; i < n; ++i) {
        int lab = i < k ? i : rng.uniform_int(0, k - 1);
        out.labels[order[i]] = lab;
        by_label[lab].push_back(order[i]);
    }
    if (!with_excluded)
        return out;
    for (auto& [lab, es] : by_label) {
        Int cap = floor_rat(Rat(static_cast<long>(es.size())) / q);
        int c = static_cast<int>(cap.convert_to<long>());
        int take = c > 0 ? rng.uniform_int(0, c) : 0;
        std::vector<int> pool = es;
        rng.shuffle(pool);
        for (int i = 0; i < take; ++i)
            out.excluded.insert(pool[i]);
    }
    return out;
}

} // namespace slopebound

namespace slopebound {

namespace {

Rat small_rat(Rng& rng, int max_num, int max_den)
{
    return Rat(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
}

HomologyClass random_primitive(Rng& rng, int box)
{
    for (;;) {
        HomologyClass c{rng.uniform(-box, box), rng.uniform(-box, box)};
        if (c.primitive())
            return c;
    }
}

} // namespace

ParallelogramNorm random_lattice_free_parallelogram(Rng& rng)
{
    for (;;) {
        Vec2 v1, v2;
        if (rng.coin(1, 3)) {
            // Unimodular image of the square max(|a|, |b|) <= 1, possibly shrunk.
            HomologyClass e1 = random_primitive(rng, 4);
            HomologyClass e2;
            bool found = false;
            for (int px = -8; px <= 8 && !found; ++px)
                for (int py = -8; py <= 8 && !found; ++py)
                    if (omega(e1, HomologyClass{px, py}) == 1) {
                        e2 = {px, py};
                        found = true;
                    }
            if (!found)
                continue;
            Rat s(rng.uniform(3, 8), 8);
            Vec2 a{Rat(e1.p + e2.p), Rat(e1.q + e2.q)}, b{Rat(e1.p - e2.p), Rat(e1.q - e2.q)};
            v1 = {a.x * s, a.y * s};
            v2 = {b.x * s, b.y * s};
        } else {
            v1 = {small_rat(rng, 9, 4), small_rat(rng, 9, 4)};
            v2 = {small_rat(rng, 9, 4), small_rat(rng, 9, 4)};
        }
        if (omega(v1, v2) == 0)
            continue;
        auto B = ParallelogramNorm::make(v1, v2);
        if (!minkowski_check(B).interior)
            return B;
    }
}

ChainTuple random_chain_tuple(Rng& rng)
{
    for (;;) {
        HomologyClass a1 = random_primitive(rng, 5), a2 = random_primitive(rng, 5);
        Int D = omega(a1, a2);
        if (D == 0 || (D < 0 ? Int(-D) : D) < 2)
            continue;
        // lattice points inside the triangle 0, alpha1, alpha2
        std::vector<std::pair<HomologyClass, std::pair<Rat, Rat>>> cand;
        for (int x = -10; x <= 10; ++x)
            for (int y = -10; y <= 10; ++y) {
                HomologyClass mu{x, y};
                if (!mu.primitive())
                    continue;
                Rat a(omega(mu, a2), D), b(omega(a1, mu), D);
                if (a > 0 && b > 0 && a + b <= 1)
                    cand.push_back({mu, {a, b}});
            }
        if (cand.empty())
            continue;
        auto [mu, ab] = rng.pick(cand);
        auto [a, b] = ab;
        Rat u(rng.uniform(0, 8), 8);
        Rat t = b + u * (1 - a - b);
        if (t <= 0 || t >= 1)
            continue;
        Rat s1 = a / (1 - t), s2 = b / t;
        Vec2 v1{s1 * Rat(a1.p), s1 * Rat(a1.q)}, v2{s2 * Rat(a2.p), s2 * Rat(a2.q)};
        if (minkowski_check(ParallelogramNorm::make(v1, v2)).interior)
            continue;
        return {a1, a2, mu, t};
    }
}

} // namespace slopebound

namespace slopebound {

KnotData random_knot_data(Rng& rng)
{
    const bool large = rng.coin();
    for (;;) {
        long m1 = rng.uniform(1, large ? 30 : 4), m2 = rng.uniform(1, large ? 30 : 4);
        long delta = rng.uniform(1, large ? 40 : 8);
        long cap = m1 * m2 * delta / 2;  // |chi| = 2g + m - 2 must stay below this
        long g1max = (cap - m1 + 2) / 2, g2max = (cap - m2 + 2) / 2;
        if (g1max < 0 || g2max < 2)
            continue;
        long g2lo = 2;
        if (large) {
            g2lo = (333 - m2 + 2 + 1) / 2;  // |chi2| >= 333
            if (g2lo > g2max)
                continue;
        }
        long g1 = rng.uniform(0, g1max), g2 = rng.uniform(g2lo, g2max);
        return KnotData::make(g1, m1, g2, m2, rng.uniform(1, 100), delta);
    }
}

} // namespace slopebound
