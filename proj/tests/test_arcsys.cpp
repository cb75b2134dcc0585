#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/arcsys.hpp"
#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"
#include "slopebound/json_io.hpp"

#include <algorithm>

using namespace slopebound;

namespace {

// One arc, one boundary circle of two boundary edges.
ArcModelSpec one_arc_spec(std::vector<RegionSpec> regions)
{
    ArcModelSpec s;
    s.vertices = {{0, 0, 2, 1}, {1, 0, 1, 2}};
    s.edges = {{0, true, 0, 1}, {1, false, 0, 1}, {2, false, 1, 0}};
    s.regions = std::move(regions);
    return s;
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Usage;
}

} // namespace

TEST_CASE("one-holed torus from a single arc")
{
    // cutting along the arc leaves one annulus region, whose frontier is two circuits
    auto m = ArcModel::build(one_arc_spec({{0, 2, 0, {}}}));
    CHECK(m.chi() == -1);
    CHECK(m.genus() == 1);
    CHECK(m.num_boundary() == 1);
    CHECK_FALSE(m.is_annulus());
    auto d = dual_graph(m);
    CHECK(d.num_vertices() == 1);
    CHECK(d.num_edges() == 1);
    CHECK(components_and_betti(d).total_betti() >= m.genus());
}

TEST_CASE("validation errors")
{
    CHECK(kind_of([] { ArcModel::build(one_arc_spec({{0, 1, 0, {}}, {0, 1, 0, {}}})); }) ==
          ErrorKind::BoundaryParallelArc);
    CHECK(kind_of([] { ArcModel::build(ArcModelSpec{}); }) == ErrorKind::MalformedRibbon);
    auto s = one_arc_spec({{0, 2, 0, {}}});
    s.edges[1].b = 7;
    CHECK(kind_of([&] { ArcModel::build(s); }) == ErrorKind::DanglingEndpoint);
    auto t = one_arc_spec({{0, 2, 0, {}}});
    t.edges.push_back({0, false, 0, 1});
    CHECK(kind_of([&] { ArcModel::build(t); }) == ErrorKind::DuplicateId);
    auto u = one_arc_spec({{0, 2, 0, {}}, {0, 1, 0, {}}});
    CHECK(kind_of([&] { ArcModel::build(u); }) == ErrorKind::RegionMismatch);
}

TEST_CASE("random models: JSON round trip, widening and reduction")
{
    for (int i = 0; i < 120; ++i) {
        Rng rng(31, static_cast<std::uint64_t>(i));
        ArcModelParams p;
        p.theta = rng.uniform_int(1, 25);
        p.planar = i % 3 == 0;
        auto m = random_arc_model(rng, p);
        auto back = ArcModel::build(arcmodel_from_json(arcmodel_to_json(m.spec())));
        CHECK(back.chi() == m.chi());
        CHECK(back.genus() == m.genus());
        CHECK(back.num_boundary() == m.num_boundary());

        // chi(S) = chi(graph) + sum of region chi
        int chi_regions = 0;
        for (const auto& r : m.regions())
            chi_regions += r.chi();
        CHECK(m.chi() == m.graph().euler_char() + chi_regions);

        auto red = reduce_system(m);
        CHECK(red.reduced.num_arcs() == m.num_arcs());
        for (auto [a, w] : red.width)
            CHECK(w == 1);

        auto widths = random_widths(rng, m);
        auto W = widen_model(m, widths);
        CHECK(W.fine.chi() == m.chi());
        CHECK(W.fine.genus() == m.genus());
        CHECK(W.fine.num_boundary() == m.num_boundary());
        int total = 0;
        for (auto [a, w] : widths)
            total += w;
        CHECK(W.fine.num_arcs() == total);
        auto R2 = reduce_system(W.fine);
        CHECK(R2.reduced.num_arcs() == m.num_arcs());
        for (int a : m.arcs())
            CHECK(R2.width[a] == widths[a]);
    }
}

TEST_CASE("reduction of a mixed model with classes 3, 2, 1, 1")
{
    for (std::uint64_t s = 0;; ++s) {
        Rng rng(41, s);
        ArcModelParams p;
        p.theta = 4;
        auto m = random_arc_model(rng, p);
        if (m.num_arcs() != 4)
            continue;
        std::map<int, int> widths;
        std::vector<int> ws{3, 2, 1, 1};
        for (size_t k = 0; k < 4; ++k)
            widths[m.arcs()[k]] = ws[k];
        auto W = widen_model(m, widths);
        CHECK(W.fine.num_arcs() == 7);
        auto red = reduce_system(W.fine);
        CHECK(red.reduced.num_arcs() == 4);
        std::vector<int> got;
        for (auto [a, w] : red.width)
            got.push_back(w);
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<int>{1, 1, 2, 3});
        break;
    }
}

TEST_CASE("dual graph genus bound on planar models")
{
    for (int i = 0; i < 100; ++i) {
        Rng rng(51, static_cast<std::uint64_t>(i));
        ArcModelParams p;
        p.theta = rng.uniform_int(1, 30);
        p.planar = true;
        auto m = random_arc_model(rng, p);
        REQUIRE(m.all_planar());
        auto d = dual_graph(m);
        CHECK(d.num_vertices() == static_cast<int>(m.regions().size()));
        CHECK(d.num_edges() == m.num_arcs());
        CHECK(components_and_betti(d).total_betti() >= m.genus());
    }
}

TEST_CASE("pi1 oracle")
{
    int disk_checks = 0;
    for (int i = 0; i < 150; ++i) {
        Rng rng(61, static_cast<std::uint64_t>(i));
        ArcModelParams p;
        p.theta = rng.uniform_int(2, 25);
        auto m = random_arc_model(rng, p);
        bool has_disk = false;
        for (const auto& r : m.regions())
            has_disk = has_disk || r.disk();
        if (!has_disk)
            CHECK(pi1_oracle(m, Subgraph::full(m.graph())));
        // the frontier circuit of a disk region bounds that disk, so it is null-homotopic
        for (const auto& c : m.circuits()) {
            if (!m.regions()[static_cast<size_t>(c.region)].disk())
                continue;
            std::vector<int> es;
            for (const auto& s : c.sides)
                es.push_back(s.arc);
            for (const auto& run : c.runs)
                es.insert(es.end(), run.begin(), run.end());
            CHECK_FALSE(pi1_oracle(m, Subgraph::from_edge_ids(m.graph(), es)));
            ++disk_checks;
            break;
        }
        // minimization output
        std::vector<int> es;
        for (const auto& e : m.spec().edges)
            if (rng.coin(3, 4))
                es.push_back(e.id);
        auto g0 = Subgraph::from_edge_ids(m.graph(), es);
        auto r = pi1_subgraph(m, g0);
        CHECK(pi1_oracle(m, r.sub));
        CHECK(3 * r.kept_arcs >= r.nu);
        CHECK(r.sub.subset_of(g0));
        if (r.dropped.empty())
            CHECK(r.sub == g0);
    }
    CHECK(disk_checks > 10);
}

TEST_CASE("cyclic word reduction")
{
    CHECK(cyclic_reduce({1, 2, -2, -1}).empty());
    CHECK(cyclic_reduce({1, 2, 3, -1}) == std::vector<int>{2, 3});
    CHECK(cyclic_reduce({1, 2}) == std::vector<int>{1, 2});
}
