#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/errors.hpp"
#include "slopebound/interval.hpp"
#include "slopebound/rational.hpp"
#include "slopebound/rng.hpp"

#include <mpfr.h>

#include <set>

using namespace slopebound;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rat("18/5") == Rat(18, 5));
    CHECK(parse_rat("-4/6") == Rat(-2, 3));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(to_string(Rat(-2, 3)) == "-2/3");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
}

TEST_CASE("integer helpers")
{
    CHECK(multiplicity(Int(18), Int(3)) == 2);
    CHECK(multiplicity(Int(-40), Int(2)) == 3);
    CHECK(ipow(Int(3), 4) == 81);
    CHECK(rpow(Rat(2), -3) == Rat(1, 8));
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(floor_rat(Rat(7, 2)) == 3);
}

namespace {

// Decimal expansions quoted to 40 places.
const char* kLn2 = "0.6931471805599453094172321214581765680755";
const char* kLn7 = "1.9459101490553133051053527434431797296371";

bool encloses(const Interval& x, const char* decimal, mpfr_prec_t bits)
{
    mpfr_t v;
    mpfr_init2(v, bits);
    mpfr_set_str(v, decimal, 10, MPFR_RNDN);
    // the quoted value is itself rounded at 1e-40
    mpfr_t lo, hi;
    mpfr_inits2(bits, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_str(lo, "1e-39", 10, MPFR_RNDN);
    mpfr_sub(hi, v, lo, MPFR_RNDN);
    mpfr_add(lo, v, lo, MPFR_RNDN);
    bool ok = mpfr_lessequal_p(x.lo(), lo) && mpfr_greaterequal_p(x.hi(), hi);
    mpfr_clears(v, lo, hi, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

} // namespace

TEST_CASE("interval constants enclose known expansions")
{
    Precision p;
    auto two = Interval::of(2L, p.bits());
    auto seven = Interval::of(7L, p.bits());
    CHECK(encloses(two.log(), kLn2, p.bits()));
    CHECK(encloses(Interval::ln2(p.bits()), kLn2, p.bits()));
    CHECK(encloses(seven.log(), kLn7, p.bits()));
    CHECK(two.log().width() < 1e-45);
}

TEST_CASE("interval arithmetic is outward")
{
    Precision p;
    auto third = Interval::of(Rat(1, 3), p.bits());
    CHECK(third.certainly_less(Rat(1, 3) + Rat(1, 1000000)));
    CHECK(third.certainly_greater(Rat(1, 3) - Rat(1, 1000000)));
    CHECK_FALSE(third.certainly_less(Rat(1, 3)));
    auto s = third * Interval::of(3L, p.bits());
    CHECK_FALSE(s.certainly_less(Rat(1)));
    CHECK_FALSE(s.certainly_greater(Rat(1)));
    auto r = Interval::of(2L, p.bits()).sqrt();
    auto back = r * r;
    CHECK_FALSE(back.certainly_less(Rat(2)));
    CHECK_FALSE(back.certainly_greater(Rat(2)));
    CHECK(Interval::of(8L, p.bits()).root(3).certainly_greater(Rat(199, 100)));
    CHECK(Interval::of(8L, p.bits()).log2().certainly_less(Rat(3001, 1000)));
}

TEST_CASE("rng streams are deterministic and index separated")
{
    Rng a(7, 0), b(7, 0), c(7, 1), d(8, 0);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int i = 0; i < 16; ++i) {
        va.push_back(a.next());
        vb.push_back(b.next());
        vc.push_back(c.next());
        vd.push_back(d.next());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
    CHECK(std::string(kRngName) == "slopebound-mt64-v1");
}

TEST_CASE("rng uniform covers its inclusive range")
{
    Rng r(1, 2);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        auto x = r.uniform(-3, 3);
        REQUIRE(x >= -3);
        REQUIRE(x <= 3);
        seen.insert(x);
    }
    CHECK(seen.size() == 7);
    std::vector<int> v{1, 2, 3, 4, 5};
    r.shuffle(v);
    std::multiset<int> s(v.begin(), v.end());
    CHECK(s == std::multiset<int>{1, 2, 3, 4, 5});
}
