#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/bigirth.hpp"
#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"

#include <numeric>

using namespace slopebound;

namespace {

Multigraph make(int n, const std::vector<std::pair<int, int>>& es)
{
    GraphSpec s;
    for (int i = 0; i < n; ++i)
        s.vertices.push_back(i);
    int id = 0;
    for (auto [a, b] : es)
        s.edges.push_back({id++, a, b});
    return Multigraph::build(s);
}

// Least edge count of a connected edge-induced subgraph with chi < 0, by subset enumeration.
int brute_bigirth(const Multigraph& g)
{
    const int E = g.num_edges();
    REQUIRE(E <= 20);
    int best = -1;
    for (unsigned mask = 1; mask < (1u << E); ++mask) {
        int e = __builtin_popcount(mask);
        if (best >= 0 && e >= best)
            continue;
        std::vector<int> parent(static_cast<size_t>(g.num_vertices()));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x)
                x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        std::vector<char> used(static_cast<size_t>(g.num_vertices()), 0);
        int comps = 0, verts = 0;
        for (int i = 0; i < E; ++i)
            if (mask >> i & 1u) {
                int a = g.endpoint_index(i, 0), b = g.endpoint_index(i, 1);
                for (int v : {a, b})
                    if (!used[static_cast<size_t>(v)]) {
                        used[static_cast<size_t>(v)] = 1;
                        ++verts;
                        ++comps;
                    }
                int ra = find(a), rb = find(b);
                if (ra != rb) {
                    parent[static_cast<size_t>(ra)] = rb;
                    --comps;
                }
            }
        if (comps == 1 && verts - e < 0)
            best = e;
    }
    return best;
}

} // namespace

TEST_CASE("exact bigirth on small graphs")
{
    CHECK(*bigirth_exact(make(1, {{0, 0}, {0, 0}})).value == 2);
    CHECK(*bigirth_exact(make(2, {{0, 1}, {0, 1}, {0, 1}})).value == 3);
    auto k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(*bigirth_exact(k4).value == 5);
    CHECK(brute_bigirth(k4) == 5);
    CHECK_FALSE(bigirth_exact(make(3, {{0, 1}, {1, 2}, {2, 0}})).value.has_value());
}

TEST_CASE("cycle-pair and exhaustive strategies agree with the brute-force oracle")
{
    for (int i = 0; i < 80; ++i) {
        Rng rng(21, static_cast<std::uint64_t>(i));
        auto g = i % 2 ? random_min_valence3(rng, rng.uniform_int(2, 8), rng.uniform_int(0, 2))
                       : random_general_graph(rng, 1);
        if (g.num_edges() > 18)
            continue;
        int oracle = brute_bigirth(g);
        auto a = bigirth_exact(g, BigirthStrategy::CyclePairs);
        REQUIRE(a.value.has_value());
        CHECK(*a.value == oracle);
        CHECK(is_valid_witness(g, *a.witness));
        CHECK(a.witness->length == oracle);
        if (g.num_edges() <= 16)
            CHECK(*bigirth_exact(g, BigirthStrategy::Exhaustive).value == oracle);
    }
}

TEST_CASE("tie extraction")
{
    auto k33 = make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    auto inner = ball(k33, 0, 1);
    auto c = tie_counts(k33, inner);
    CHECK(c.n0 == 3);
    CHECK(c.n1 == 0);
    auto t = extract_tie(k33, inner);
    CHECK(t.E_t - t.V_t == 2);
    std::string why;
    CHECK_MESSAGE(check_tie(k33, inner, t, &why), why);

    // no valence-1 vertices in the inner subgraph
    auto theta = make(2, {{0, 1}, {0, 1}, {0, 1}});
    try {
        extract_tie(theta, Subgraph::full(theta));
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
}

TEST_CASE("tie conclusions on random balls")
{
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        Rng rng(5, static_cast<std::uint64_t>(i));
        auto g = random_min_valence3(rng, rng.uniform_int(4, 14));
        auto inner = ball(g, g.vertex_ids()[0], rng.uniform_int(1, 2));
        auto c = tie_counts(g, inner);
        if (c.n0 == 0 || c.n1 >= 2 * c.n0)
            continue;
        auto t = extract_tie(g, inner);
        std::string why;
        CHECK_MESSAGE(check_tie(g, inner, t, &why), why);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("trivalent witness")
{
    auto theta = make(2, {{0, 1}, {0, 1}, {0, 1}});
    auto w = trivalent_witness(theta);
    CHECK(w.length <= 4);
    CHECK(is_valid_witness(theta, w));
    auto k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto w4 = trivalent_witness(k4);
    CHECK(w4.length <= 8);
    CHECK(trivalent_bound_holds(w4.length, 4));
    auto dumbbell = make(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(trivalent_witness(dumbbell).length <= 3);
    CHECK_THROWS_AS(trivalent_witness(make(3, {{0, 1}, {1, 2}, {2, 0}})), Error);
}

TEST_CASE("balanced pruning")
{
    auto f8 = make(1, {{0, 0}, {0, 0}});
    auto p = prune_balanced(f8);
    CHECK(p.sub == Subgraph::full(f8));
    auto pend = make(4, {{0, 0}, {0, 0}, {0, 1}, {1, 2}, {2, 3}});
    auto q = prune_balanced(pend);
    CHECK(q.sub.num_edges() == 2);
    std::string why;
    CHECK_MESSAGE(check_balanced(q.sub, q.alpha_floor, &why), why);
    CHECK_THROWS_AS(prune_balanced(make(3, {{0, 1}, {1, 2}, {2, 0}})), Error);
}

TEST_CASE("general witness")
{
    auto f8 = make(1, {{0, 0}, {0, 0}});
    auto w = general_witness(f8);
    CHECK(w.length == 2);
    CHECK(general_bound_holds(w.length, -1, 2));
    // theta with subdivided edges: bound 4 log2 2 * floor(6/1) = 24, exact value 6
    auto th = make(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto wt = general_witness(th);
    CHECK(wt.length <= 24);
    CHECK(*bigirth_exact(th).value == 6);
    CHECK(brute_bigirth(th) == 6);
    // union with a cycle component
    auto mixed = make(4, {{0, 0}, {0, 0}, {1, 2}, {2, 3}, {3, 1}});
    auto wm = general_witness(mixed);
    CHECK(is_valid_witness(mixed, wm));
    CHECK(general_bound_holds(wm.length, mixed.euler_char(), mixed.num_edges()));
}

TEST_CASE("random general graphs: witness within the bound and at least the exact value")
{
    for (int i = 0; i < 100; ++i) {
        Rng rng(8, static_cast<std::uint64_t>(i));
        auto g = random_general_graph(rng, 2);
        auto w = general_witness(g);
        auto ex = bigirth_exact(g);
        REQUIRE(ex.value.has_value());
        CHECK(is_valid_witness(g, w));
        CHECK(w.length >= *ex.value);
        CHECK(general_bound_holds(w.length, g.euler_char(), g.num_edges()));
    }
}
