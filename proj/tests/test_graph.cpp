#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"
#include "slopebound/graph.hpp"
#include "slopebound/json_io.hpp"

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

Multigraph k33()
{
    return make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

} // namespace

TEST_CASE("building multigraphs")
{
    auto f8 = make(1, {{0, 0}, {0, 0}});
    CHECK(f8.valence(0) == 4);
    CHECK(f8.euler_char() == -1);
    auto theta = make(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(theta.num_edges() == 3);
    CHECK(theta.euler_char() == -1);
    CHECK(make(1, {}).euler_char() == 1);

    GraphSpec bad{{0, 1}, {{0, 0, 5}}};
    try {
        Multigraph::build(bad);
        FAIL("expected DanglingEndpoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DanglingEndpoint);
    }
    GraphSpec dup{{0, 0}, {}};
    CHECK_THROWS_AS(Multigraph::build(dup), Error);
}

TEST_CASE("components and betti numbers")
{
    auto f8 = make(1, {{0, 0}, {0, 0}});
    auto cb = components_and_betti(f8);
    CHECK(cb.count == 1);
    CHECK(cb.total_betti() == 2);
    auto theta = make(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(components_and_betti(theta).total_betti() == 2);
    auto two = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto c2 = components_and_betti(two);
    REQUIRE(c2.count == 2);
    CHECK(c2.components[0].betti == 1);
    CHECK(c2.components[1].betti == 1);
}

TEST_CASE("neighbourhoods and balls")
{
    auto theta = make(2, {{0, 1}, {0, 1}, {0, 1}});
    Subgraph s0 = Subgraph::from_ids(theta, {0}, {});
    CHECK(neighborhood(theta, s0, 0) == s0);
    CHECK(ball(theta, 0, 1) == Subgraph::full(theta));
    auto k = k33();
    auto b = ball(k, 0, 1);
    CHECK(b.num_edges() == 3);
    CHECK(b.num_vertices() == 4);
    int leaves = 0;
    for (int vi : b.vertex_indices())
        leaves += b.valence_index(vi) == 1;
    CHECK(leaves == 3);
}

TEST_CASE("ball matches a breadth-first oracle on random graphs")
{
    for (int i = 0; i < 50; ++i) {
        Rng rng(11, static_cast<std::uint64_t>(i));
        auto g = random_min_valence3(rng, rng.uniform_int(2, 10), rng.uniform_int(0, 3));
        int r = rng.uniform_int(0, 3);
        int v = g.vertex_ids()[0];
        // distances by BFS
        std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
        dist[0] = 0;
        std::vector<int> q{0};
        for (size_t h = 0; h < q.size(); ++h)
            for (int ei : g.incident(q[h])) {
                int w = g.endpoint_index(ei, 0) == q[h] ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(q[h])] + 1;
                    q.push_back(w);
                }
            }
        // an edge is in B_r(v) iff one endpoint is at distance < r
        auto b = ball(g, v, r);
        for (int ei = 0; ei < g.num_edges(); ++ei) {
            int da = dist[static_cast<size_t>(g.endpoint_index(ei, 0))];
            int db = dist[static_cast<size_t>(g.endpoint_index(ei, 1))];
            bool expect = std::min(da, db) < r;
            CHECK(b.has_edge_index(ei) == expect);
        }
    }
}

TEST_CASE("graph JSON round trip and loop encodings")
{
    auto g = graph_from_json(json::parse(R"({"vertices":[0,1],"edges":[[0],[0,0],[0,1]]})"));
    CHECK(g.num_edges() == 3);
    CHECK(g.edges()[0].loop());
    CHECK(g.edges()[1].loop());
    CHECK(g.valence(0) == 5);
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back.num_edges() == 3);
    CHECK(back.valence(0) == 5);
    auto sub = Subgraph::from_edge_ids(g, {2});
    auto sj = subgraph_to_json(sub);
    CHECK(sj["edge_ids"] == json::array({2}));
}
