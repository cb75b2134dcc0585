#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"
#include "slopebound/keyineq.hpp"

using namespace slopebound;

namespace {

struct Instance {
    ArcModel m;
    LabeledInstance lab;
    WeightSystem w;
};

Instance make_instance(std::uint64_t seed, std::uint64_t i, const Rat& q, bool excluded = true)
{
    Rng rng(seed, i);
    ArcModelParams p;
    p.theta = rng.uniform_int(2, 40);
    auto m = random_arc_model(rng, p);
    auto lab = random_labels(rng, m.arcs(), q, 4, excluded);
    WeightSystem w;
    for (auto& [a, l] : lab.labels)
        w[l] = Rat(rng.uniform_int(1, 20), rng.uniform_int(1, 5));
    return {std::move(m), std::move(lab), std::move(w)};
}

// Independent recount of the exact conclusions.
void recheck(const Instance& in, const Subgraph& g1)
{
    auto cb = components_and_betti(g1);
    CHECK(g1.euler_char() < 0);
    for (const auto& c : cb.components)
        CHECK(c.betti > 0);  // no simply connected component
    for (int e : g1.edge_ids())
        CHECK(in.lab.excluded.count(e) == 0);
    // lambda(G) over vertices, theta(G) over interior edges
    std::map<int, long> mult;
    for (auto [a, l] : in.lab.labels)
        mult[l]++;
    Rat lambda = 0;
    for (int v : g1.vertex_ids())
        lambda += in.w.at(in.lab.labels.at(in.m.arc_at(v)));
    long theta = -1;
    for (int e : g1.edge_ids())
        if (in.m.is_arc(e)) {
            long t = mult[in.lab.labels.at(e)];
            theta = theta < 0 ? t : std::min(theta, t);
        }
    auto chk = verify_key_inequality(in.m, in.lab.labels, in.w, in.lab.excluded, Rat(2), g1);
    CHECK(chk.lambda == lambda);
    CHECK(chk.theta == theta);
    CHECK(chk.lhs == lambda / Rat(theta * -g1.euler_char()));
}

} // namespace

TEST_CASE("label statistics")
{
    auto in = make_instance(1, 0, Rat(2));
    auto st = label_stats(in.m, in.lab.labels);
    long total = 0, mx = 0;
    for (auto [l, t] : st.theta) {
        total += t;
        mx = std::max(mx, t);
    }
    CHECK(st.Theta == total);
    CHECK(st.theta_inf == mx);
    Labeling partial = in.lab.labels;
    partial.erase(partial.begin());
    CHECK_THROWS_AS(label_stats(in.m, partial), Error);
}

TEST_CASE("single label without excluded edges")
{
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto in = make_instance(2, i, Rat(2), false);
        Labeling one;
        for (int a : in.m.arcs())
            one[a] = 0;
        WeightSystem w{{0, Rat(1)}};
        auto r = key_inequality_subgraph(in.m, one, w, {}, Rat(2));
        CHECK(r.split[0].empty());
        CHECK(r.k >= 1);
        CHECK_MESSAGE(r.checks.all(), r.checks.failed());
    }
}

TEST_CASE("too many excluded edges in one label")
{
    auto in = make_instance(3, 0, Rat(2), false);
    Labeling one;
    for (int a : in.m.arcs())
        one[a] = 0;
    std::set<int> all(in.m.arcs().begin(), in.m.arcs().end());
    try {
        key_inequality_subgraph(in.m, one, {{0, Rat(1)}}, all, Rat(2));
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
}

TEST_CASE("key inequality on random reduced models")
{
    for (int qq = 2; qq <= 3; ++qq)
        for (std::uint64_t i = 0; i < 60; ++i) {
            auto in = make_instance(4, i, Rat(qq));
            auto r = key_inequality_subgraph(in.m, in.lab.labels, in.w, in.lab.excluded, Rat(qq));
            CHECK(r.tau == tau_of_q(Rat(qq)));
            CHECK_MESSAGE(r.checks.all(), r.checks.failed());
            CHECK(pi1_oracle(in.m, r.gamma1));
            recheck(in, r.gamma1);
        }
}

TEST_CASE("standard weights")
{
    for (std::uint64_t i = 0; i < 60; ++i) {
        Rng rng(5, i);
        auto in = make_instance(5, i, Rat(2));
        std::map<int, int> ones;
        for (int a : in.m.arcs())
            ones[a] = 1;
        auto W1 = widen_model(in.m, ones);
        auto full = Subgraph::full(in.m.graph());
        auto c1 = standard_weights_check(W1, in.m, in.lab.labels, full);
        CHECK(c1.length0 == full.num_edges());
        CHECK(c1.holds);

        auto widths = random_widths(rng, in.m);
        auto W = widen_model(in.m, widths);
        auto lam = standard_weights(in.lab.labels, widths);
        for (auto [a, l] : in.lab.labels)
            CHECK(lam.at(l) >= widths.at(a));
        std::vector<int> arcs_only;
        for (int a : in.m.arcs())
            if (rng.coin())
                arcs_only.push_back(a);
        auto g = Subgraph::from_edge_ids(in.m.graph(), arcs_only);
        auto c = standard_weights_check(W, in.m, in.lab.labels, g);
        CHECK(c.holds);
        // without boundary edges each arc keeps one representative, and #E <= #V / 2 <= lambda / 2
        CHECK(c.length0 == static_cast<long>(arcs_only.size()));
        CHECK(Rat(c.length0) <= c.bound / 3);
    }
}

TEST_CASE("key consequence on widened models")
{
    for (int qq = 2; qq <= 3; ++qq)
        for (std::uint64_t i = 0; i < 40; ++i) {
            Rng rng(6, i + 100 * static_cast<std::uint64_t>(qq));
            auto in = make_instance(6, i + 100 * static_cast<std::uint64_t>(qq), Rat(qq));
            auto W = widen_model(in.m, random_widths(rng, in.m));
            auto r = key_consequence(W.fine, in.lab.labels, in.lab.excluded, Rat(qq));
            CHECK_MESSAGE(r.checks.all(), r.checks.failed());
            auto cb = components_and_betti(r.K);
            CHECK(cb.count == 1);
            CHECK(cb.total_betti() == 2);
            for (int vi : r.K.vertex_indices())
                CHECK(r.K.valence_index(vi) >= 2);
            for (int e : r.K.edge_ids())
                CHECK(in.lab.excluded.count(e) == 0);
            CHECK(pi1_oracle(r.red->reduced, r.K));
        }
}
