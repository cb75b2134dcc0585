#include "slopebound/bigirth.hpp"

#include "slopebound/errors.hpp"
#include "slopebound/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace slopebound {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr int kInf = INT_MAX;

struct Cycle {
    Bits e;
    Bits v;
    int len = 0;
};

bool has_negative_component(const Multigraph& g)
{
    for (auto& c : components_and_betti(g).components)
        if (c.betti >= 2)
            return true;
    return false;
}

class CycleEnumerator {
public:
    CycleEnumerator(const Multigraph& g, int max_len) : g_(g), L_(max_len) {}

    std::vector<Cycle> run()
    {
        int n = g_.num_vertices(), m = g_.num_edges();
        for (int ei = 0; ei < m; ++ei)
            if (g_.edges()[ei].loop() && L_ >= 1)
                emit({ei});
        if (L_ >= 2) {
            for (int ei = 0; ei < m; ++ei) {
                if (g_.edges()[ei].loop())
                    continue;
                for (int ej = ei + 1; ej < m; ++ej) {
                    if (g_.edges()[ej].loop())
                        continue;
                    int a = g_.endpoint_index(ei, 0), b = g_.endpoint_index(ei, 1);
                    int c = g_.endpoint_index(ej, 0), d = g_.endpoint_index(ej, 1);
                    if ((a == c && b == d) || (a == d && b == c))
                        emit({ei, ej});
                }
            }
        }
        if (L_ >= 3) {
            onpath_.assign(n, 0);
            for (s_ = 0; s_ < n; ++s_) {
                onpath_[s_] = 1;
                dfs(s_, 0);
                onpath_[s_] = 0;
            }
        }
        return std::move(out_);
    }

private:
    void emit(const std::vector<int>& edges)
    {
        Cycle c;
        c.e.resize(g_.num_edges());
        c.v.resize(g_.num_vertices());
        for (int ei : edges) {
            c.e.set(ei);
            c.v.set(g_.endpoint_index(ei, 0));
            c.v.set(g_.endpoint_index(ei, 1));
        }
        c.len = static_cast<int>(edges.size());
        out_.push_back(std::move(c));
    }

    void dfs(int x, int depth)
    {
        for (int ei : g_.incident(x)) {
            const Edge& e = g_.edges()[ei];
            if (e.loop())
                continue;
            int y = g_.endpoint_index(ei, 0) == x ? g_.endpoint_index(ei, 1) : g_.endpoint_index(ei, 0);
            if (y == s_) {
                if (depth >= 2 && path_.front() < ei && depth + 1 <= L_) {
                    path_.push_back(ei);
                    emit(path_);
                    path_.pop_back();
                }
            } else if (y > s_ && !onpath_[y] && depth + 2 <= L_) {
                onpath_[y] = 1;
                path_.push_back(ei);
                dfs(y, depth + 1);
                path_.pop_back();
                onpath_[y] = 0;
            }
        }
    }

    const Multigraph& g_;
    int L_;
    int s_ = 0;
    std::vector<char> onpath_;
    std::vector<int> path_;
    std::vector<Cycle> out_;
};

// Shortest path between two disjoint vertex sets, at most cap edges. Returns edge indices.
std::optional<std::vector<int>> connect(const Multigraph& g, const Bits& from, const Bits& to, int cap)
{
    int n = g.num_vertices();
    std::vector<int> dist(n, -1), pe(n, -1);
    std::deque<int> q;
    for (int vi = 0; vi < n; ++vi)
        if (from.test(vi)) {
            dist[vi] = 0;
            q.push_back(vi);
        }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (to.test(x)) {
            std::vector<int> path;
            for (int cur = x; pe[cur] >= 0;) {
                path.push_back(pe[cur]);
                int ei = pe[cur];
                cur = g.endpoint_index(ei, 0) == cur ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
            }
            return path;
        }
        if (dist[x] >= cap)
            continue;
        for (int ei : g.incident(x)) {
            int y = g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                pe[y] = ei;
                q.push_back(y);
            }
        }
    }
    return std::nullopt;
}

BigirthWitness witness_from_edge_indices(const Multigraph& g, const std::vector<int>& eis, std::string route)
{
    Subgraph s(g);
    for (int ei : eis)
        s.add_edge_index(ei);
    BigirthWitness w{s, s.num_edges(), s.euler_char(), std::move(route)};
    return w;
}

BigirthResult cycle_pairs(const Multigraph& g)
{
    BigirthResult res;
    if (!has_negative_component(g))
        return res;
    int E = g.num_edges();
    int L = std::min(E, 6);
    for (;;) {
        auto cycles = CycleEnumerator(g, L).run();
        std::stable_sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.len < b.len; });
        int best = kInf;
        Bits best_set(E);
        for (size_t j = 0; j < cycles.size(); ++j) {
            const Cycle& cj = cycles[j];
            if (best != kInf && cj.len + 1 >= best)
                break;
            for (size_t i = 0; i < j; ++i) {
                const Cycle& ci = cycles[i];
                if (ci.v.intersects(cj.v)) {
                    Bits u = ci.e | cj.e;
                    int c = static_cast<int>(u.count());
                    if (c < best) {
                        best = c;
                        best_set = u;
                    }
                } else {
                    int base = ci.len + cj.len;
                    if (best != kInf && base + 1 >= best)
                        continue;
                    int cap = best == kInf ? E : best - base - 1;
                    auto path = connect(g, ci.v, cj.v, cap);
                    if (!path)
                        continue;
                    int c = base + static_cast<int>(path->size());
                    if (c < best) {
                        best = c;
                        best_set = ci.e | cj.e;
                        for (int ei : *path)
                            best_set.set(ei);
                    }
                }
            }
        }
        if ((best != kInf && best - 1 <= L) || L >= E) {
            if (best == kInf)
                fail(ErrorKind::ConstructionFailed, "cycle search exhausted without a pair");
            std::vector<int> eis;
            for (auto ei = best_set.find_first(); ei != Bits::npos; ei = best_set.find_next(ei))
                eis.push_back(static_cast<int>(ei));
            res.value = best;
            res.witness = witness_from_edge_indices(g, eis, "cycle-pair");
            return res;
        }
        L = best != kInf ? std::min(E, best - 1) : std::min(E, 2 * L);
    }
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[x] != x)
            x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        p[a] = b;
        return true;
    }
};

} // namespace

BigirthResult bigirth_exhaustive(const Multigraph& g)
{
    int E = g.num_edges();
    if (E > 24)
        fail(ErrorKind::CapExceeded, "exhaustive bigirth limited to 24 edges");
    BigirthResult res;
    int best = kInf;
    uint32_t best_mask = 0;
    int n = g.num_vertices();
    for (uint32_t mask = 1; mask < (1u << E); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc >= best)
            continue;
        Dsu d(n);
        std::vector<char> used(n, 0);
        int nv = 0, comps = 0;
        for (int ei = 0; ei < E; ++ei) {
            if (!(mask >> ei & 1u))
                continue;
            int a = g.endpoint_index(ei, 0), b = g.endpoint_index(ei, 1);
            for (int x : {a, b})
                if (!used[x]) {
                    used[x] = 1;
                    ++nv;
                    ++comps;
                }
            if (d.unite(a, b))
                --comps;
        }
        if (comps == 1 && nv - pc < 0) {
            best = pc;
            best_mask = mask;
        }
    }
    if (best == kInf)
        return res;
    std::vector<int> eis;
    for (int ei = 0; ei < E; ++ei)
        if (best_mask >> ei & 1u)
            eis.push_back(ei);
    res.value = best;
    res.witness = witness_from_edge_indices(g, eis, "exhaustive");
    return res;
}

BigirthResult bigirth_exact(const Multigraph& g, BigirthStrategy strategy)
{
    switch (strategy) {
    case BigirthStrategy::Exhaustive:
        return bigirth_exhaustive(g);
    case BigirthStrategy::CyclePairs:
        return cycle_pairs(g);
    case BigirthStrategy::Auto:
        break;
    }
    return g.num_edges() <= 16 ? bigirth_exhaustive(g) : cycle_pairs(g);
}

bool is_valid_witness(const Multigraph& g, const BigirthWitness& w)
{
    const Subgraph& s = w.subgraph;
    if (&s.parent() != &g || !s.is_valid())
        return false;
    if (s.num_edges() != w.length || s.euler_char() != w.chi)
        return false;
    return w.chi < 0 && is_connected(s);
}

// ---- ties ----

TieCounts tie_counts(const Multigraph& g, const Subgraph& inner)
{
    Subgraph g1 = neighborhood(g, inner, 1);
    TieCounts c;
    for (int vi : inner.vertex_indices())
        if (inner.valence_index(vi) == 1)
            ++c.n0;
    for (int vi : g1.vertex_indices())
        if (g1.valence_index(vi) == 1)
            ++c.n1;
    return c;
}

namespace {

void require_min_valence3(const Multigraph& g)
{
    for (int vi = 0; vi < g.num_vertices(); ++vi)
        if (g.valence(vi) < 3)
            fail(ErrorKind::HypothesisViolated,
                 "vertex " + std::to_string(g.vertex_ids()[vi]) + " has valence " + std::to_string(g.valence(vi)));
}

struct TiePiece {
    std::vector<int> edge_ids;  // sorted
    int vertex = -1;            // index, -1 for a lone edge
};

std::vector<int> closure_in(const Multigraph& g, const Subgraph& inner, const std::vector<int>& edge_ids)
{
    std::vector<int> W;
    for (int id : edge_ids) {
        int ei = g.edge_index(id);
        for (int side = 0; side < 2; ++side) {
            int x = g.endpoint_index(ei, side);
            if (inner.has_vertex_index(x))
                W.push_back(g.vertex_ids()[x]);
        }
    }
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    return W;
}

} // namespace

TieSet extract_tie(const Multigraph& g, const Subgraph& inner)
{
    require_min_valence3(g);
    TieCounts c = tie_counts(g, inner);
    if (c.n1 >= 2 * c.n0)
        fail(ErrorKind::HypothesisViolated,
             "tie needs n1 < 2 n0, got n0=" + std::to_string(c.n0) + " n1=" + std::to_string(c.n1));
    Subgraph g1 = neighborhood(g, inner, 1);
    TieSet t;

    for (int vi : g1.vertex_indices()) {
        if (inner.has_vertex_index(vi) || g1.valence_index(vi) < 3)
            continue;
        for (int ei : g.incident(vi)) {
            if (!g1.has_edge_index(ei))
                continue;
            t.edges.push_back(g.edges()[ei].id);
            if (t.edges.size() == 3)
                break;
        }
        t.interior_vertices = {g.vertex_ids()[vi]};
        t.single_vertex_case = true;
        break;
    }

    if (!t.single_vertex_case) {
        std::vector<TiePiece> pieces;
        for (int ei : g1.edge_indices()) {
            if (inner.has_edge_index(ei))
                continue;
            if (inner.has_vertex_index(g.endpoint_index(ei, 0)) && inner.has_vertex_index(g.endpoint_index(ei, 1)))
                pieces.push_back({{g.edges()[ei].id}, -1});
        }
        for (int vi : g1.vertex_indices()) {
            if (inner.has_vertex_index(vi) || g1.valence_index(vi) != 2)
                continue;
            TiePiece p;
            p.vertex = vi;
            for (int ei : g.incident(vi))
                if (g1.has_edge_index(ei))
                    p.edge_ids.push_back(g.edges()[ei].id);
            std::sort(p.edge_ids.begin(), p.edge_ids.end());
            pieces.push_back(std::move(p));
        }
        if (pieces.empty())
            fail(ErrorKind::ConstructionFailed, "no tie component despite n1 < 2 n0");
        std::sort(pieces.begin(), pieces.end(),
                  [](const TiePiece& a, const TiePiece& b) { return a.edge_ids < b.edge_ids; });
        size_t beta = std::min<size_t>(2, pieces.size());
        for (size_t i = 0; i < beta; ++i) {
            t.edges.insert(t.edges.end(), pieces[i].edge_ids.begin(), pieces[i].edge_ids.end());
            if (pieces[i].vertex >= 0)
                t.interior_vertices.push_back(g.vertex_ids()[pieces[i].vertex]);
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    std::sort(t.interior_vertices.begin(), t.interior_vertices.end());
    t.closure_vertices = closure_in(g, inner, t.edges);
    t.E_t = static_cast<int>(t.edges.size());
    t.V_t = static_cast<int>(t.interior_vertices.size());
    t.w = static_cast<int>(t.closure_vertices.size());
    return t;
}

bool check_tie(const Multigraph& g, const Subgraph& inner, const TieSet& t, std::string* why)
{
    auto bad = [&](const std::string& m) {
        if (why)
            *why = m;
        return false;
    };
    Subgraph g1 = neighborhood(g, inner, 1);
    std::vector<char> tv(g.num_vertices(), 0);
    for (int id : t.interior_vertices) {
        int vi = g.vertex_index(id);
        if (vi < 0 || !g1.has_vertex_index(vi) || inner.has_vertex_index(vi))
            return bad("tie vertex outside the annulus");
        tv[vi] = 1;
    }
    std::vector<int> W;
    for (int id : t.edges) {
        int ei = g.edge_index(id);
        if (ei < 0 || !g1.has_edge_index(ei) || inner.has_edge_index(ei))
            return bad("tie edge outside the annulus");
        for (int side = 0; side < 2; ++side) {
            int x = g.endpoint_index(ei, side);
            if (tv[x])
                continue;
            if (!inner.has_vertex_index(x))
                return bad("tie not closed: endpoint outside both pieces");
            W.push_back(x);
        }
    }
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    int Et = static_cast<int>(t.edges.size()), Vt = static_cast<int>(t.interior_vertices.size());
    int w = static_cast<int>(W.size());
    if (Et != t.E_t || Vt != t.V_t || w != t.w)
        return bad("recorded counts disagree");
    int x = Et - Vt;
    if (x < 1 || x > 2)
        return bad("E_t - V_t out of [1,2]");
    TieCounts c = tie_counts(g, inner);
    if (c.n1 < 2 * c.n0 - 2 && x != 2)
        return bad("E_t - V_t must be 2 when n1 < 2 n0 - 2");
    if (std::max(w, Et) > 2 * x)
        return bad("max(w, E_t) > 2 (E_t - V_t)");
    return true;
}

int ball_leaves(const Multigraph& g, int vertex_id, int r)
{
    Subgraph b = ball(g, vertex_id, r);
    int n = 0;
    for (int vi : b.vertex_indices())
        if (b.valence_index(vi) == 1)
            ++n;
    return n;
}

namespace {

struct TieGraph {
    Subgraph H;
    int excess = 0;  // E_t - V_t
};

// Tree paths from v0 to the tie's closure, plus the tie itself.
TieGraph tie_subgraph(const Multigraph& g, int v0, int s)
{
    Subgraph inner = ball(g, g.vertex_ids()[v0], s);
    TieSet t = extract_tie(g, inner);
    std::string why;
    if (!check_tie(g, inner, t, &why))
        fail(ErrorKind::ConstructionFailed, "tie check: " + why);

    int n = g.num_vertices();
    std::vector<int> pe(n, -1), dist(n, -1);
    std::deque<int> q{v0};
    dist[v0] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int ei : g.incident(x)) {
            int y = g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                pe[y] = ei;
                q.push_back(y);
            }
        }
    }
    TieGraph out{Subgraph(g), t.E_t - t.V_t};
    out.H.add_vertex_index(v0);
    for (int wid : t.closure_vertices) {
        int cur = g.vertex_index(wid);
        if (dist[cur] > s)
            fail(ErrorKind::ConstructionFailed, "closure vertex beyond radius");
        while (pe[cur] >= 0) {
            int ei = pe[cur];
            out.H.add_edge_index(ei);
            cur = g.endpoint_index(ei, 0) == cur ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
        }
    }
    for (int id : t.edges)
        out.H.add_edge_index(g.edge_index(id));
    return out;
}

BigirthWitness finish(const Multigraph& g, const Subgraph& s, const std::string& route)
{
    BigirthWitness w{s, s.num_edges(), s.euler_char(), route};
    if (!is_valid_witness(g, w))
        fail(ErrorKind::ConstructionFailed, "witness (" + route + ") is not a connected negative-chi subgraph");
    return w;
}

std::vector<int> loops_at(const Multigraph& g, int vi)
{
    std::vector<int> out;
    for (int ei : g.incident(vi))
        if (g.edges()[ei].loop())
            out.push_back(ei);
    return out;
}

} // namespace

BigirthWitness trivalent_witness(const Multigraph& g)
{
    if (g.num_vertices() < 2)
        fail(ErrorKind::HypothesisViolated, "need at least two vertices");
    require_min_valence3(g);
    int V = g.num_vertices();
    auto comps = components_and_betti(g);

    auto bounded = [&](BigirthWitness w) {
        if (!trivalent_bound_holds(w.length, V))
            fail(ErrorKind::ConstructionFailed, "witness exceeds 4 log2 V");
        return w;
    };

    for (auto& c : comps.components) {
        if (c.vertex_ids.size() != 1)
            continue;
        auto L = loops_at(g, g.vertex_index(c.vertex_ids[0]));
        Subgraph s(g);
        s.add_edge_index(L[0]);
        s.add_edge_index(L[1]);
        return bounded(finish(g, s, "one-vertex component"));
    }
    for (auto& c : comps.components) {
        if (c.vertex_ids.size() != 2)
            continue;
        int a = g.vertex_index(c.vertex_ids[0]), b = g.vertex_index(c.vertex_ids[1]);
        std::vector<int> joins;
        for (int ei : g.incident(a))
            if (!g.edges()[ei].loop())
                joins.push_back(ei);
        Subgraph s(g);
        if (joins.size() >= 3) {
            for (int k = 0; k < 3; ++k)
                s.add_edge_index(joins[k]);
        } else {
            s.add_edge_index(joins[0]);
            s.add_edge_index(loops_at(g, a).at(0));
            s.add_edge_index(loops_at(g, b).at(0));
        }
        return bounded(finish(g, s, "two-vertex component"));
    }

    // Shortest circuit through each vertex of length <= 2, as edge indices sorted.
    int n = V;
    std::vector<std::vector<int>> short_circuit(n);
    for (int vi = 0; vi < n; ++vi) {
        std::vector<std::vector<int>> cands;
        for (int ei : g.incident(vi)) {
            if (g.edges()[ei].loop()) {
                cands.push_back({ei});
                continue;
            }
            for (int ej : g.incident(vi))
                if (ej > ei && !g.edges()[ej].loop() &&
                    g.edges()[ej].other(g.vertex_ids()[vi]) == g.edges()[ei].other(g.vertex_ids()[vi]))
                    cands.push_back({ei, ej});
        }
        if (!cands.empty())
            short_circuit[vi] = *std::min_element(cands.begin(), cands.end());
    }
    bool all_short = std::all_of(short_circuit.begin(), short_circuit.end(), [](auto& c) { return !c.empty(); });

    if (all_short) {
        for (int vi = 0; vi < n; ++vi) {
            // lowest pair of distinct neighbours, with the lowest edge to each
            std::map<int, int> nb;  // neighbour index -> lowest edge index
            for (int ei : g.incident(vi)) {
                if (g.edges()[ei].loop())
                    continue;
                int y = g.endpoint_index(ei, 0) == vi ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
                if (!nb.count(y))
                    nb[y] = ei;
            }
            if (nb.size() < 2)
                continue;
            auto it = nb.begin();
            int v1 = it->first, e1 = it->second;
            ++it;
            int v2 = it->first, e2 = it->second;
            Subgraph s(g);
            s.add_edge_index(e1);
            s.add_edge_index(e2);
            for (int ei : short_circuit[v1])
                s.add_edge_index(ei);
            for (int ei : short_circuit[v2])
                s.add_edge_index(ei);
            return bounded(finish(g, s, "short circuits"));
        }
        fail(ErrorKind::ConstructionFailed, "no vertex with two distinct neighbours");
    }

    int v = -1;
    for (int vi = 0; vi < n && v < 0; ++vi)
        if (short_circuit[vi].empty())
            v = vi;

    // m[r] = valence-1 count of B_r(v), until it vanishes
    std::vector<int> m{0};
    {
        Subgraph b(g);
        b.add_vertex_index(v);
        for (int r = 1;; ++r) {
            b = neighborhood(g, b, 1);
            int leaves = 0;
            for (int vi : b.vertex_indices())
                if (b.valence_index(vi) == 1)
                    ++leaves;
            m.push_back(leaves);
            if (leaves == 0)
                break;
        }
    }
    auto M = [&](int r) { return r < static_cast<int>(m.size()) ? m[r] : 0; };
    if (M(1) < 3)
        fail(ErrorKind::ConstructionFailed, "base vertex has fewer than three leaves");

    int s = 1;
    while (!(static_cast<long long>(M(s + 1)) < (1LL << (s + 1))))
        ++s;
    std::string tag = "s=" + std::to_string(s);

    if (M(s) >= (1 << s) + 1) {
        TieGraph tg = tie_subgraph(g, v, s);
        if (tg.excess != 2)
            fail(ErrorKind::ConstructionFailed, "expected a double tie");
        return bounded(finish(g, tg.H, "double tie at " + tag));
    }

    int sp = -1;
    for (int r = 1; r < s; ++r)
        if (M(r + 1) < 2 * M(r)) {
            sp = r;
            break;
        }
    if (sp < 0)
        fail(ErrorKind::ConstructionFailed, "no inner radius with a tie");
    TieGraph inner = tie_subgraph(g, v, sp);
    std::string tag2 = "s'=" + std::to_string(sp);
    if (inner.excess == 2)
        return bounded(finish(g, inner.H, "double tie at " + tag2));
    if (inner.H.euler_char() > 0 || inner.H.num_edges() > 2 * sp + 2)
        fail(ErrorKind::ConstructionFailed, "single-tie subgraph out of bounds");
    TieGraph outer = tie_subgraph(g, v, s);
    if (outer.excess == 2)
        return bounded(finish(g, outer.H, "single tie at " + tag2 + ", double tie at " + tag));
    return bounded(finish(g, outer.H.unite(inner.H), "single tie at " + tag2 + " joined with single tie at " + tag));
}

// ---- pruning ----

std::vector<Chain> chains_of(const Subgraph& s)
{
    const Multigraph& g = s.parent();
    std::vector<char> big(g.num_vertices(), 0);
    for (int vi : s.vertex_indices())
        big[vi] = s.valence_index(vi) >= 3;
    std::vector<char> seen(g.num_edges(), 0);
    std::vector<Chain> out;
    auto across = [&](int ei, int x) {
        return g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
    };
    for (int a : s.vertex_indices()) {
        if (!big[a])
            continue;
        for (int e0 : g.incident(a)) {
            if (!s.has_edge_index(e0) || seen[e0])
                continue;
            Chain c;
            c.a = g.vertex_ids()[a];
            int prev = e0, cur = across(e0, a);
            seen[e0] = 1;
            c.edges.push_back(g.edges()[e0].id);
            while (!big[cur]) {
                c.interior.push_back(g.vertex_ids()[cur]);
                int next = -1;
                for (int ei : g.incident(cur))
                    if (s.has_edge_index(ei) && ei != prev) {
                        next = ei;
                        break;
                    }
                if (next < 0 || seen[next])
                    break;
                seen[next] = 1;
                c.edges.push_back(g.edges()[next].id);
                prev = next;
                cur = across(next, cur);
            }
            c.b = g.vertex_ids()[cur];
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool check_balanced(const Subgraph& s, int alpha_floor, std::string* why)
{
    auto bad = [&](const std::string& m) {
        if (why)
            *why = m;
        return false;
    };
    if (s.euler_char() >= 0)
        return bad("chi >= 0");
    for (int vi : s.vertex_indices())
        if (s.valence_index(vi) < 2)
            return bad("vertex of valence < 2");
    int count = 0;
    auto label = component_labels(s, &count);
    std::vector<char> has_big(count, 0);
    for (int vi : s.vertex_indices())
        if (s.valence_index(vi) >= 3)
            has_big[label[vi]] = 1;
    for (int c = 0; c < count; ++c)
        if (!has_big[c])
            return bad("component without a branch vertex");
    size_t covered = 0;
    for (auto& c : chains_of(s)) {
        covered += c.edges.size();
        if (static_cast<int>(c.edges.size()) > alpha_floor)
            return bad("chain longer than floor(alpha)");
    }
    if (static_cast<int>(covered) != s.num_edges())
        return bad("chains do not cover the edges");
    return true;
}

PruneResult prune_balanced(const Multigraph& g)
{
    int chi = g.euler_char();
    if (chi >= 0)
        fail(ErrorKind::HypothesisViolated, "chi = " + std::to_string(chi) + " is not negative");
    const long long len0 = g.num_edges(), abs0 = -chi;
    PruneResult pr{Subgraph::full(g), static_cast<int>(len0 / abs0), {}};
    Subgraph& s = pr.sub;

    for (;;) {
        bool changed = false;
        for (int vi : s.vertex_indices()) {
            int val = s.valence_index(vi);
            if (val == 0) {
                s.remove_vertex_index(vi);
                pr.steps.push_back("isolated " + std::to_string(g.vertex_ids()[vi]));
                changed = true;
                break;
            }
            if (val == 1) {
                for (int ei : g.incident(vi))
                    if (s.has_edge_index(ei))
                        s.remove_edge_index(ei);
                s.remove_vertex_index(vi);
                pr.steps.push_back("leaf " + std::to_string(g.vertex_ids()[vi]));
                changed = true;
                break;
            }
        }
        if (changed)
            continue;

        int count = 0;
        auto label = component_labels(s, &count);
        std::vector<char> has_big(count, 0);
        for (int vi : s.vertex_indices())
            if (s.valence_index(vi) >= 3)
                has_big[label[vi]] = 1;
        for (int c = 0; c < count && !changed; ++c) {
            if (has_big[c])
                continue;
            for (int ei : s.edge_indices())
                if (label[g.endpoint_index(ei, 0)] == c)
                    s.remove_edge_index(ei);
            int first = -1;
            for (int vi : s.vertex_indices())
                if (label[vi] == c) {
                    if (first < 0)
                        first = g.vertex_ids()[vi];
                    s.remove_vertex_index(vi);
                }
            pr.steps.push_back("circle through " + std::to_string(first));
            changed = true;
        }
        if (changed)
            continue;

        for (auto& c : chains_of(s)) {
            if (static_cast<long long>(c.edges.size()) * abs0 <= len0)
                continue;
            for (int id : c.edges)
                s.remove_edge_index(g.edge_index(id));
            for (int id : c.interior)
                s.remove_vertex_index(g.vertex_index(id));
            pr.steps.push_back("chain from edge " + std::to_string(c.edges.front()));
            changed = true;
            break;
        }
        if (!changed)
            break;
    }
    std::string why;
    if (!check_balanced(s, pr.alpha_floor, &why))
        fail(ErrorKind::ConstructionFailed, "pruned subgraph: " + why);
    return pr;
}

BigirthWitness general_witness(const Multigraph& g)
{
    int chi = g.euler_char();
    if (chi >= 0)
        fail(ErrorKind::HypothesisViolated, "chi = " + std::to_string(chi) + " is not negative");
    for (auto& c : components_and_betti(g).components)
        if (c.betti == 0)
            fail(ErrorKind::HypothesisViolated,
                 "component through vertex " + std::to_string(c.vertex_ids[0]) + " is a tree");

    PruneResult pr = prune_balanced(g);
    auto chains = chains_of(pr.sub);

    GraphSpec star;
    for (int vi : pr.sub.vertex_indices())
        if (pr.sub.valence_index(vi) >= 3)
            star.vertices.push_back(g.vertex_ids()[vi]);
    std::map<int, size_t> chain_of;
    for (size_t k = 0; k < chains.size(); ++k) {
        int id = *std::min_element(chains[k].edges.begin(), chains[k].edges.end());
        star.edges.push_back({id, chains[k].a, chains[k].b});
        chain_of[id] = k;
    }
    Multigraph gs = Multigraph::build(star);

    std::vector<int> star_edges;
    std::string route;
    if (gs.num_vertices() == 1) {
        star_edges = {gs.edges()[0].id, gs.edges()[1].id};
        route = "contracted to one vertex: two loops";
    } else {
        BigirthWitness tw = trivalent_witness(gs);
        star_edges = tw.subgraph.edge_ids();
        route = "contracted, " + tw.route;
    }
    std::vector<int> ids;
    for (int id : star_edges) {
        const Chain& c = chains[chain_of.at(id)];
        ids.insert(ids.end(), c.edges.begin(), c.edges.end());
    }
    BigirthWitness w = finish(g, Subgraph::from_edge_ids(g, ids), route);
    if (!general_bound_holds(w.length, chi, g.num_edges()))
        fail(ErrorKind::ConstructionFailed, "witness exceeds the general bound");
    return w;
}

bool trivalent_bound_holds(int length, int num_vertices)
{
    return ipow(Int(2), length) <= ipow(Int(num_vertices), 4);
}

int general_bound_floor_alpha(int chi, int length_graph) { return length_graph / std::abs(chi); }

bool general_bound_holds(int length, int chi, int length_graph)
{
    int fa = general_bound_floor_alpha(chi, length_graph);
    return ipow(Int(2), length) <= ipow(Int(2 * std::abs(chi)), 4 * fa);
}

} // namespace slopebound
