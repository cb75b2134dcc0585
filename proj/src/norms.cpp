#include "slopebound/norms.hpp"

#include "slopebound/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace slopebound {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }
Rat rabs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

std::string cls_str(const HomologyClass& a) { return "(" + to_string(a.p) + "," + to_string(a.q) + ")"; }

} // namespace

bool HomologyClass::primitive() const { return boost::multiprecision::gcd(p, q) == 1; }

Int omega(const HomologyClass& a, const HomologyClass& b) { return a.p * b.q - a.q * b.p; }

Slope Slope::make(const Int& p, const Int& q)
{
    HomologyClass c{p, q};
    if (!c.primitive())
        fail(ErrorKind::HypothesisViolated, "slope " + cls_str(c) + " is not primitive");
    Slope s;
    s.p = p;
    s.q = q;
    if (p < 0 || (p == 0 && q < 0)) {
        s.p = -p;
        s.q = -q;
    }
    return s;
}

std::string Slope::str() const { return cls_str(cls()); }

Int delta(const Slope& a, const Slope& b) { return iabs(omega(a.cls(), b.cls())); }

std::string NumericalSlope::str() const { return infinite ? "inf" : to_string(value); }

NumericalSlope numerical_slope(const HomologyClass& alpha, const HomologyClass& mu, const HomologyClass& lambda)
{
    if (iabs(omega(mu, lambda)) != 1)
        fail(ErrorKind::DegenerateFraming, "framing " + cls_str(mu) + ", " + cls_str(lambda) + " is not a basis");
    if (alpha.p == 0 && alpha.q == 0)
        fail(ErrorKind::DegenerateFraming, "class must be nonzero");
    NumericalSlope r;
    Int d = omega(alpha, mu);
    if (d == 0)
        r.infinite = true;
    else
        r.value = Rat(omega(alpha, lambda), d);
    return r;
}

Rat omega(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

ParallelogramNorm ParallelogramNorm::make(const Vec2& v1, const Vec2& v2)
{
    if (omega(v1, v2) == 0)
        fail(ErrorKind::DegenerateNorm, "parallelogram vertices are dependent");
    return {v1, v2};
}

std::pair<Rat, Rat> ParallelogramNorm::coords(const Vec2& v) const
{
    Rat w = omega(v1, v2);
    if (w == 0)
        fail(ErrorKind::DegenerateNorm, "parallelogram vertices are dependent");
    return {omega(v, v2) / w, omega(v1, v) / w};
}

Rat ParallelogramNorm::eval(const Vec2& v) const
{
    auto [a, b] = coords(v);
    return std::max(rabs(a + b), rabs(a - b));
}

Int norm_from_surfaces(const std::vector<SurfaceTerm>& terms, const Slope& c)
{
    if (terms.empty())
        fail(ErrorKind::DegenerateNorm, "no surfaces");
    bool all_same = true;
    Int total = 0;
    for (const auto& s : terms) {
        if (s.N <= 0 || s.m <= 0)
            fail(ErrorKind::HypothesisViolated, "surface multiplicities must be positive");
        if (!(s.s == terms.front().s))
            all_same = false;
        total += s.N * s.m * delta(c, s.s);
    }
    if (all_same)
        fail(ErrorKind::DegenerateNorm, "all surfaces have slope " + terms.front().s.str());
    return total;
}

MinkowskiResult minkowski_check(const ParallelogramNorm& B)
{
    MinkowskiResult r;
    r.area = 2 * rabs(omega(B.v1, B.v2));
    Int X = ceil_rat(std::max(rabs(B.v1.x), rabs(B.v2.x)));
    Int Y = ceil_rat(std::max(rabs(B.v1.y), rabs(B.v2.y)));
    // The gauge is even, so only points with canonical sign are scanned.
    for (Int y = 0; y <= Y; ++y) {
        for (Int x = -X; x <= X; ++x) {
            if (y == 0 && x <= 0)
                continue;
            Rat g = B.eval({Rat(x), Rat(y)});
            if (g >= 1)
                continue;
            bool better = !r.interior || g < r.interior_gauge ||
                          (g == r.interior_gauge && iabs(y) < iabs(r.interior->q));
            if (better) {
                r.interior = HomologyClass{x, y};
                r.interior_gauge = g;
            }
        }
    }
    r.holds = r.interior.has_value() || r.area <= 4;
    return r;
}

ChainResult knot_chain_verify(const HomologyClass& a1, const HomologyClass& a2, const HomologyClass& mu, const Rat& t,
                              const ChainConfig& cfg)
{
    if (!a1.primitive() || !a2.primitive() || !mu.primitive())
        fail(ErrorKind::HypothesisViolated, "classes must be primitive");
    Int D = omega(a1, a2);
    if (D == 0)
        fail(ErrorKind::HypothesisViolated, "alpha1 and alpha2 are dependent");
    if (t <= 0 || t >= 1)
        fail(ErrorKind::HypothesisViolated, "t must lie strictly between 0 and 1");
    // mu = a alpha1 + b alpha2
    Rat a(omega(mu, a2), D), b(omega(a1, mu), D);
    if (a <= 0 || b <= 0)
        fail(ErrorKind::HypothesisViolated, "mu is not a positive combination of alpha1 and alpha2");
    ChainResult r;
    r.s1 = a / (1 - t);
    r.s2 = b / t;
    r.ratio = r.s2 / r.s1;
    Vec2 v1{r.s1 * Rat(a1.p), r.s1 * Rat(a1.q)}, v2{r.s2 * Rat(a2.p), r.s2 * Rat(a2.q)};
    r.minkowski = minkowski_check(ParallelogramNorm::make(v1, v2));
    if (r.minkowski.interior)
        fail(ErrorKind::HypothesisViolated,
             "ball through mu has interior lattice point " + cls_str(*r.minkowski.interior));
    r.omega_v = rabs(omega(v1, v2));
    r.q1 = iabs(omega(a1, mu));
    r.Delta = iabs(D);
    Rat lhs = Rat(r.q1 * r.q1, r.Delta);
    r.identity_holds = lhs == t * t * r.ratio * r.omega_v;
    r.report = compare_exact("knot-chain", lhs, 2 * r.ratio * cfg.factor);
    if (!r.identity_holds) {
        r.report.status = BoundStatus::Fails;
        r.report.note = "q1^2/Delta differs from t^2 ratio |omega(v1,v2)|";
    } else if (!r.minkowski.holds) {
        r.report.status = BoundStatus::Fails;
        r.report.note = "lattice-free ball with area above 4";
    }
    return r;
}

} // namespace slopebound
