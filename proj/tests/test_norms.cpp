#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"
#include "slopebound/norms.hpp"

using namespace slopebound;

namespace {

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

Rat rabs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Gauge as the largest of the four facet functionals, each equal to 1 on its edge.
Rat facet_gauge(const Vec2& v1, const Vec2& v2, const Vec2& x)
{
    Vec2 m1{-v1.x, -v1.y}, m2{-v2.x, -v2.y};
    std::vector<std::pair<Vec2, Vec2>> facets{{v1, v2}, {v2, m1}, {m1, m2}, {m2, v1}};
    Rat best = 0;
    bool first = true;
    for (auto [P, Q] : facets) {
        Vec2 d{Q.x - P.x, Q.y - P.y};
        Rat l = omega(d, x) / omega(d, P);
        if (first || l > best)
            best = l;
        first = false;
    }
    return best;
}

Vec2 rvec(Rng& rng)
{
    return {Rat(rng.uniform(-12, 12), rng.uniform(1, 5)), Rat(rng.uniform(-12, 12), rng.uniform(1, 5))};
}

} // namespace

TEST_CASE("slopes and intersection numbers")
{
    CHECK(delta(Slope::make(3, 1), Slope::make(5, 2)) == 1);
    auto s = Slope::make(-3, 4);
    CHECK(s.p == 3);
    CHECK(s.q == -4);
    CHECK(delta(s, s) == 0);
    CHECK(delta(Slope::make(1, 0), Slope::make(7, 5)) == 5);
    CHECK(kind_of([] { Slope::make(2, 4); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("delta is symmetric and invariant under SL2(Z)")
{
    Rng rng(1, 0);
    for (int i = 0; i < 200; ++i) {
        HomologyClass x, y;
        do
            x = {rng.uniform(-20, 20), rng.uniform(-20, 20)};
        while (!x.primitive());
        do
            y = {rng.uniform(-20, 20), rng.uniform(-20, 20)};
        while (!y.primitive());
        auto s1 = Slope::make(x.p, x.q), s2 = Slope::make(y.p, y.q);
        CHECK(delta(s1, s2) == delta(s2, s1));
        CHECK((delta(s1, s2) == 0) == (s1 == s2));
        // change of framing by [[1, k], [0, 1]] then [[0, -1], [1, 0]]
        long k = rng.uniform(-5, 5);
        auto tr = [&](const HomologyClass& c) {
            HomologyClass u{c.p + k * c.q, c.q};
            return Slope::make(-u.q, u.p);
        };
        CHECK(delta(tr(x), tr(y)) == delta(s1, s2));
    }
}

TEST_CASE("numerical slopes")
{
    HomologyClass mu{1, 0}, lambda{0, 1};
    CHECK(numerical_slope(mu, mu, lambda).infinite);
    CHECK(numerical_slope(lambda, mu, lambda).value == 0);
    auto s = numerical_slope({1, 2}, mu, lambda);
    CHECK_FALSE(s.infinite);
    CHECK(s.value == Rat(-1, 2));
    CHECK(kind_of([&] { numerical_slope({1, 1}, {2, 0}, lambda); }) == ErrorKind::DegenerateFraming);
    CHECK(kind_of([&] { numerical_slope({0, 0}, mu, lambda); }) == ErrorKind::DegenerateFraming);
}

TEST_CASE("norms from surfaces")
{
    std::vector<SurfaceTerm> t{{1, 1, Slope::make(0, 1)}, {1, 1, Slope::make(1, 0)}};
    CHECK(norm_from_surfaces(t, Slope::make(1, 1)) == 2);
    std::vector<SurfaceTerm> same{{1, 1, Slope::make(2, 3)}, {2, 1, Slope::make(2, 3)}};
    CHECK(kind_of([&] { norm_from_surfaces(same, Slope::make(1, 1)); }) == ErrorKind::DegenerateNorm);
    std::vector<SurfaceTerm> neg{{0, 1, Slope::make(0, 1)}, {1, 1, Slope::make(1, 0)}};
    CHECK(kind_of([&] { norm_from_surfaces(neg, Slope::make(1, 1)); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("parallelogram gauge is a norm and matches the facet oracle")
{
    CHECK(kind_of([] { ParallelogramNorm::make({1, 2}, {2, 4}); }) == ErrorKind::DegenerateNorm);
    Rng rng(2, 0);
    for (int i = 0; i < 300; ++i) {
        Vec2 v1 = rvec(rng), v2 = rvec(rng);
        if (omega(v1, v2) == 0)
            continue;
        auto B = ParallelogramNorm::make(v1, v2);
        CHECK(B.eval(v1) == 1);
        CHECK(B.eval(v2) == 1);
        Vec2 x = rvec(rng), y = rvec(rng);
        CHECK(B.eval(x) == facet_gauge(v1, v2, x));
        Rat c(rng.uniform(-7, 7), rng.uniform(1, 4));
        CHECK(B.eval({c * x.x, c * x.y}) == rabs(c) * B.eval(x));
        CHECK(B.eval({x.x + y.x, x.y + y.y}) <= B.eval(x) + B.eval(y));
        CHECK(B.eval({-x.x, -x.y}) == B.eval(x));
        CHECK((B.eval(x) == 0) == (x == Vec2{}));
    }
}

TEST_CASE("Minkowski check")
{
    auto a = minkowski_check(ParallelogramNorm::make({1, 0}, {0, 1}));
    CHECK(a.area == 2);
    CHECK_FALSE(a.interior);
    auto b = minkowski_check(ParallelogramNorm::make({2, 0}, {0, 2}));
    CHECK(b.area == 8);
    REQUIRE(b.interior);
    CHECK(*b.interior == HomologyClass{1, 0});
    auto c = minkowski_check(ParallelogramNorm::make({2, 1}, {1, 2}));
    CHECK(c.area == 6);
    REQUIRE(c.interior);
    CHECK(*c.interior == HomologyClass{1, 1});
    CHECK(c.interior_gauge == Rat(2, 3));
}

TEST_CASE("Minkowski interior search agrees with a wide brute force")
{
    Rng rng(3, 0);
    for (int i = 0; i < 200; ++i) {
        Vec2 v1 = rvec(rng), v2 = rvec(rng);
        if (omega(v1, v2) == 0)
            continue;
        auto B = ParallelogramNorm::make(v1, v2);
        auto m = minkowski_check(B);
        bool any = false;
        for (int x = -30; x <= 30 && !any; ++x)
            for (int y = -30; y <= 30 && !any; ++y)
                if ((x || y) && facet_gauge(v1, v2, {x, y}) < 1)
                    any = true;
        CHECK(m.interior.has_value() == any);
        if (!any)
            CHECK(m.area <= 4);
    }
    for (int i = 0; i < 200; ++i) {
        Rng r(4, static_cast<std::uint64_t>(i));
        auto B = random_lattice_free_parallelogram(r);
        auto m = minkowski_check(B);
        CHECK_FALSE(m.interior);
        CHECK(m.area <= 4);
    }
}

TEST_CASE("knot chain")
{
    auto c = knot_chain_verify({1, 1}, {1, -1}, {1, 0}, Rat(1, 2));
    CHECK(c.q1 == 1);
    CHECK(c.Delta == 2);
    CHECK(c.report.lhs == "1/2");
    CHECK(c.report.rhs == "2");
    CHECK(c.report.holds());
    CHECK(c.identity_holds);
    CHECK(kind_of([] { knot_chain_verify({1, 1}, {1, -1}, {1, 0}, Rat(0)); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { knot_chain_verify({1, 1}, {1, -1}, {1, 0}, Rat(1)); }) == ErrorKind::HypothesisViolated);
    CHECK(kind_of([] { knot_chain_verify({1, 1}, {2, 2}, {1, 0}, Rat(1, 2)); }) == ErrorKind::HypothesisViolated);
    // mu outside the cone of alpha1, alpha2
    CHECK(kind_of([] { knot_chain_verify({1, 1}, {1, -1}, {-1, 0}, Rat(1, 2)); }) == ErrorKind::HypothesisViolated);
    // a factor 4 reading scales the right-hand side
    ChainConfig four{4};
    CHECK(knot_chain_verify({1, 1}, {1, -1}, {1, 0}, Rat(1, 2), four).report.rhs == "8");
}

TEST_CASE("random chain tuples")
{
    for (int i = 0; i < 200; ++i) {
        Rng rng(5, static_cast<std::uint64_t>(i));
        auto t = random_chain_tuple(rng);
        auto c = knot_chain_verify(t.a1, t.a2, t.mu, t.t);
        CHECK(c.report.holds());
        CHECK(c.identity_holds);
        // direct recomputation
        Int q1 = omega(t.a1, t.mu), D = omega(t.a1, t.a2);
        CHECK(Rat(q1 * q1, D < 0 ? Int(-D) : D) <= 2 * c.ratio);
        CHECK(c.omega_v <= 2);
    }
}
