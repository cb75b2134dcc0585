#pragma once

#include "slopebound/bounds.hpp"
#include "slopebound/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slopebound {

// Integer class in H1 of the boundary torus, coordinates in a fixed basis.
struct HomologyClass {
    Int p = 0;
    Int q = 0;
    bool primitive() const;
    bool operator==(const HomologyClass&) const = default;
};

Int omega(const HomologyClass& a, const HomologyClass& b);  // p1 q2 - q1 p2

// Primitive class modulo sign; first nonzero coordinate is positive.
struct Slope {
    Int p = 1;
    Int q = 0;
    static Slope make(const Int& p, const Int& q);  // HypothesisViolated unless primitive
    HomologyClass cls() const { return {p, q}; }
    std::string str() const;
    bool operator==(const Slope&) const = default;
};

Int delta(const Slope& a, const Slope& b);

struct NumericalSlope {
    bool infinite = false;
    Rat value = 0;
    std::string str() const;
};

// omega(alpha, lambda) / omega(alpha, mu). DegenerateFraming unless (mu, lambda) is a basis.
NumericalSlope numerical_slope(const HomologyClass& alpha, const HomologyClass& mu, const HomologyClass& lambda);

struct Vec2 {
    Rat x = 0;
    Rat y = 0;
    bool operator==(const Vec2&) const = default;
};

Rat omega(const Vec2& a, const Vec2& b);

// Unit ball is the convex hull of +-v1, +-v2.
struct ParallelogramNorm {
    Vec2 v1, v2;
    static ParallelogramNorm make(const Vec2& v1, const Vec2& v2);  // DegenerateNorm if dependent
    // v = a v1 + b v2
    std::pair<Rat, Rat> coords(const Vec2& v) const;
    // max(|a + b|, |a - b|), which equals |a| + |b|
    Rat eval(const Vec2& v) const;
};

struct SurfaceTerm {
    Int N = 1;
    Int m = 1;
    Slope s;
};

// sum N_i m_i Delta(c, s_i)
Int norm_from_surfaces(const std::vector<SurfaceTerm>& terms, const Slope& c);

struct MinkowskiResult {
    Rat area = 0;                               // 2 |omega(v1, v2)|
    std::optional<HomologyClass> interior;      // nonzero lattice point of least gauge, if any
    Rat interior_gauge = 0;
    bool holds = true;                          // no interior point implies area <= 4
};

MinkowskiResult minkowski_check(const ParallelogramNorm& B);

struct ChainResult {
    BoundReport report;  // q1^2 / Delta <= 2 ratio factor
    Int q1 = 0;
    Int Delta = 0;
    Rat s1 = 0, s2 = 0;  // v_i = s_i alpha_i
    Rat ratio = 0;       // |alpha1| / |alpha2| = s2 / s1
    Rat omega_v = 0;     // |omega(v1, v2)|
    bool identity_holds = false;  // q1^2 / Delta == t^2 ratio |omega(v1, v2)|
    MinkowskiResult minkowski;
};

// mu = (1 - t) v1 + t v2 with v_i positive multiples of alpha_i of equal norm.
// HypothesisViolated unless the classes are primitive and independent, 0 < t < 1,
// both multiples are positive, and the ball through mu has no interior lattice point.
ChainResult knot_chain_verify(const HomologyClass& a1, const HomologyClass& a2, const HomologyClass& mu, const Rat& t,
                              const ChainConfig& cfg = {});

} // namespace slopebound
