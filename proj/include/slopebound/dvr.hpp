#pragma once

#include "slopebound/rational.hpp"
#include "slopebound/rng.hpp"

#include <climits>
#include <optional>
#include <string>
#include <vector>

namespace slopebound {

// Polynomial over Q, coefficients from degree 0 upward, no trailing zeros.
struct Poly {
    std::vector<Rat> c;
    Poly() = default;
    Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& x);
    static Poly monomial(const Rat& x, int deg);
    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    int low_order() const;  // least degree with non-zero coefficient; requires non-zero
    void trim();
    bool operator==(const Poly&) const = default;
};
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_gcd(Poly a, Poly b);  // monic

// Field element: ratio of polynomials over Q in lowest terms, monic denominator.
// p-adic fields use only constants.
class Elem {
public:
    Elem() : num_(), den_(Poly::constant(1)) {}
    Elem(const Rat& x) : num_(Poly::constant(x)), den_(Poly::constant(1)) {}  // NOLINT
    Elem(long x) : Elem(Rat(x)) {}                                             // NOLINT
    Elem(Poly num, Poly den);
    static Elem t_pow(long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rat constant() const;  // requires is_constant()
    bool operator==(const Elem& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::string str() const;

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator/(const Elem& a, const Elem& b);
    Elem operator-() const;

private:
    Poly num_, den_;
    void normalize();
};

inline constexpr long kInfValuation = LONG_MAX;

struct Field {
    enum class Kind { Padic, Function };
    Kind kind = Kind::Padic;
    long p = 3;  // prime, p-adic only
    static Field padic(long p);
    static Field function();
    static Field parse(const std::string& s);  // "p:3" or "t"
    std::string name() const;
    bool operator==(const Field&) const = default;

    long valuation(const Elem& x) const;  // kInfValuation for 0
    Elem pi_pow(long k) const;
    // Canonical representative of x + pi^n O.
    Elem truncate_below(const Elem& x, long n) const;
    void check(const Elem& x) const;  // FieldMismatch for a non-constant p-adic element
};

struct Mat2 {
    Elem a, b, c, d;
    Elem det() const { return a * d - b * c; }
    Elem trace() const { return a + d; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;  // SingularMatrix when det = 0
    static Mat2 identity() { return {1, 0, 0, 1}; }
    bool operator==(const Mat2&) const = default;
};

struct LatticeVertex {
    Field field;
    Mat2 basis;  // [[pi^alpha, r], [0, pi^gamma]], min(alpha, gamma, v(r)) = 0
    long alpha = 0, gamma = 0;
    bool operator==(const LatticeVertex& o) const { return field == o.field && basis == o.basis; }
    std::string key() const;
};

LatticeVertex vertex_normalize(const Mat2& m, const Field& f);
LatticeVertex base_vertex(const Field& f);
long tree_distance(const LatticeVertex& x, const LatticeVertex& y);
LatticeVertex act(const Mat2& a, const LatticeVertex& s);
long displacement(const Mat2& a, const LatticeVertex& s);
// p + 1 neighbours; p-adic only.
std::vector<LatticeVertex> neighbors(const LatticeVertex& s);
// First vertex after s on the geodesic to t; s != t.
LatticeVertex step_toward(const LatticeVertex& s, const LatticeVertex& t);

void require_sl2(const Mat2& a, const Field& f);
long translation_length(const Mat2& a, const Field& f);

struct OracleResult {
    long length = 0;
    LatticeVertex witness;
    long steps = 0;
    long start_displacement = 0;
    bool certified = false;  // no neighbour (p-adic) or geodesic step (function field) improves
    std::string method;
};
OracleResult translation_length_oracle(const Mat2& a, const Field& f, long max_steps = 100000);

// All vertices within distance r of s (p-adic), in breadth-first order.
std::vector<LatticeVertex> tree_ball(const LatticeVertex& s, int r);

// Every vertex of the radius-r ball around s0 is moved an even distance.
bool bipartite_on_ball(const Mat2& a, const Field& f, int r);

struct CommutatorCheck {
    bool holds = false;
    long valuation = 0;  // v(tr [X,Y] - 2), kInfValuation when zero
};
void require_in_stabilizer(const Mat2& x, const Field& f, long t);
CommutatorCheck arc_commutator_check(long t, const Mat2& x, const Mat2& y, const Field& f);

// Random elementary word of the given length (elementary matrices with random
// entries and diag(pi, 1/pi)).
Mat2 random_sl2(Rng& rng, const Field& f, int word_length);
// Random element of the arc stabilizer with lower-left entry in pi^t O.
Mat2 random_stabilizer(Rng& rng, const Field& f, long t, int word_length = 6);

} // namespace slopebound
