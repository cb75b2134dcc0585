#include "slopebound/dvr.hpp"

#include "slopebound/errors.hpp"

#include <gmp.h>

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace slopebound {

// ---- polynomials ----

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& x) { return Poly(std::vector<Rat>{x}); }

Poly Poly::monomial(const Rat& x, int deg)
{
    std::vector<Rat> v(static_cast<size_t>(deg) + 1, Rat(0));
    v.back() = x;
    return Poly(std::move(v));
}

int Poly::low_order() const
{
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            return static_cast<int>(i);
    return -1;
}

void Poly::trim()
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        v[i] += b.c[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b)
{
    std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        v[i] -= b.c[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.zero() || b.zero())
        return Poly();
    std::vector<Rat> v(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            v[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(v));
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    if (b.zero())
        fail(ErrorKind::SingularMatrix, "polynomial division by zero");
    r = a;
    std::vector<Rat> qc(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Rat(0));
    while (!r.zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat f = r.c.back() / b.c.back();
        qc[static_cast<size_t>(shift)] = f;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[j + static_cast<size_t>(shift)] -= f * b.c[j];
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly poly_gcd(Poly a, Poly b)
{
    while (!b.zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero())
        return a;
    Rat lead = a.c.back();
    for (auto& x : a.c)
        x /= lead;
    return a;
}

// ---- field elements ----

Elem::Elem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.zero())
        fail(ErrorKind::SingularMatrix, "zero denominator");
    normalize();
}

void Elem::normalize()
{
    if (num_.zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            divmod(num_, g, q, r);
            num_ = q;
            divmod(den_, g, q, r);
            den_ = q;
        }
    }
    Rat lead = den_.c.back();
    if (lead != 1) {
        for (auto& x : num_.c)
            x /= lead;
        for (auto& x : den_.c)
            x /= lead;
    }
}

Elem Elem::t_pow(long k)
{
    if (k >= 0)
        return Elem(Poly::monomial(1, static_cast<int>(k)), Poly::constant(1));
    return Elem(Poly::constant(1), Poly::monomial(1, static_cast<int>(-k)));
}

Rat Elem::constant() const
{
    if (!is_constant())
        fail(ErrorKind::FieldMismatch, "element " + str() + " is not a constant");
    return num_.zero() ? Rat(0) : num_.c[0];
}

namespace {

std::string poly_str(const Poly& p)
{
    if (p.zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << to_string(p.c[i]);
        if (i == 1)
            os << "*t";
        else if (i > 1)
            os << "*t^" << i;
    }
    return os.str();
}

} // namespace

std::string Elem::str() const
{
    if (is_constant())
        return to_string(constant());
    if (den_.degree() == 0)
        return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

Elem operator+(const Elem& a, const Elem& b)
{
    if (a.is_constant() && b.is_constant())
        return Elem(a.constant() + b.constant());
    return Elem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Elem operator-(const Elem& a, const Elem& b)
{
    if (a.is_constant() && b.is_constant())
        return Elem(a.constant() - b.constant());
    return Elem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Elem operator*(const Elem& a, const Elem& b)
{
    if (a.is_constant() && b.is_constant())
        return Elem(a.constant() * b.constant());
    return Elem(a.num_ * b.num_, a.den_ * b.den_);
}

Elem operator/(const Elem& a, const Elem& b)
{
    if (b.is_zero())
        fail(ErrorKind::SingularMatrix, "division by zero");
    if (a.is_constant() && b.is_constant())
        return Elem(a.constant() / b.constant());
    return Elem(a.num_ * b.den_, a.den_ * b.num_);
}

Elem Elem::operator-() const { return Elem(0) - *this; }

// ---- fields ----

Field Field::padic(long p)
{
    if (p < 2)
        fail(ErrorKind::HypothesisViolated, "p must be a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            fail(ErrorKind::HypothesisViolated, std::to_string(p) + " is not prime");
    Field f;
    f.kind = Kind::Padic;
    f.p = p;
    return f;
}

Field Field::function()
{
    Field f;
    f.kind = Kind::Function;
    f.p = 0;
    return f;
}

Field Field::parse(const std::string& s)
{
    if (s == "t" || s == "function")
        return function();
    if (s.rfind("p:", 0) == 0)
        return padic(std::stol(s.substr(2)));
    fail(ErrorKind::Usage, "field must be p:<prime> or t");
}

std::string Field::name() const { return kind == Kind::Padic ? "p:" + std::to_string(p) : "t"; }

void Field::check(const Elem& x) const
{
    if (kind == Kind::Padic && !x.is_constant())
        fail(ErrorKind::FieldMismatch, "p-adic field element must be rational, got " + x.str());
}

long Field::valuation(const Elem& x) const
{
    check(x);
    if (x.is_zero())
        return kInfValuation;
    if (kind == Kind::Padic) {
        Rat r = x.constant();
        Int P(p);
        return multiplicity(num(r), P) - multiplicity(den(r), P);
    }
    return x.num().low_order() - x.den().low_order();
}

Elem Field::pi_pow(long k) const
{
    if (kind == Kind::Padic)
        return Elem(rpow(Rat(p), k));
    return Elem::t_pow(k);
}

Elem Field::truncate_below(const Elem& x, long n) const
{
    long e = valuation(x);
    if (e == kInfValuation || e >= n)
        return Elem(0);
    if (kind == Kind::Padic) {
        Rat r = x.constant();
        Int P(p);
        Int nn = num(r), dd = den(r);
        if (e >= 0)
            nn /= ipow(P, static_cast<unsigned long>(e));
        else
            dd /= ipow(P, static_cast<unsigned long>(-e));
        Int M = ipow(P, static_cast<unsigned long>(n - e));
        Int dm = dd % M;
        if (dm < 0)
            dm += M;
        Int inv;
        mpz_invert(inv.backend().data(), dm.backend().data(), M.backend().data());
        Int res = (nn % M) * inv % M;
        if (res < 0)
            res += M;
        return Elem(Rat(res) * rpow(Rat(p), e));
    }
    // Laurent expansion at t = 0, truncated below degree n
    const Poly& N = x.num();
    const Poly& D = x.den();
    int ln = N.low_order(), ld = D.low_order();
    std::vector<Rat> Ns(N.c.begin() + ln, N.c.end()), Ds(D.c.begin() + ld, D.c.end());
    long K = n - e;
    std::vector<Rat> s(static_cast<size_t>(K), Rat(0));
    for (long k = 0; k < K; ++k) {
        Rat acc = k < static_cast<long>(Ns.size()) ? Ns[static_cast<size_t>(k)] : Rat(0);
        for (long j = 1; j <= k && j < static_cast<long>(Ds.size()); ++j)
            acc -= Ds[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
        s[static_cast<size_t>(k)] = acc / Ds[0];
    }
    return Elem(Poly(s), Poly::constant(1)) * Elem::t_pow(e);
}

// ---- matrices ----

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const
{
    Elem D = det();
    if (D.is_zero())
        fail(ErrorKind::SingularMatrix, "matrix is singular");
    return {d / D, -b / D, -c / D, a / D};
}

std::string LatticeVertex::key() const
{
    return std::to_string(alpha) + "," + std::to_string(gamma) + "," + basis.b.str();
}

namespace {

long minval(const Field& f, const Mat2& m)
{
    return std::min({f.valuation(m.a), f.valuation(m.b), f.valuation(m.c), f.valuation(m.d)});
}

} // namespace

LatticeVertex vertex_normalize(const Mat2& m, const Field& f)
{
    for (const Elem* e : {&m.a, &m.b, &m.c, &m.d})
        f.check(*e);
    if (m.det().is_zero())
        fail(ErrorKind::SingularMatrix, "lattice basis is singular");
    Elem a = m.a, b = m.b, c = m.c, d = m.d;
    if (f.valuation(c) < f.valuation(d)) {
        std::swap(a, b);
        std::swap(c, d);
    }
    Elem g = c / d;
    a = a - g * b;
    long alpha = f.valuation(a), gamma = f.valuation(d);
    b = b * (f.pi_pow(gamma) / d);
    b = f.truncate_below(b, alpha);
    long vb = f.valuation(b);
    long s = std::min(alpha, gamma);
    if (vb != kInfValuation)
        s = std::min(s, vb);
    LatticeVertex out;
    out.field = f;
    out.alpha = alpha - s;
    out.gamma = gamma - s;
    out.basis = {f.pi_pow(out.alpha), b / f.pi_pow(s), Elem(0), f.pi_pow(out.gamma)};
    return out;
}

LatticeVertex base_vertex(const Field& f) { return vertex_normalize(Mat2::identity(), f); }

long tree_distance(const LatticeVertex& x, const LatticeVertex& y)
{
    if (!(x.field == y.field))
        fail(ErrorKind::FieldMismatch, "vertices over " + x.field.name() + " and " + y.field.name());
    const Field& f = x.field;
    Mat2 X = x.basis.inverse() * y.basis;
    return f.valuation(X.det()) - 2 * minval(f, X);
}

LatticeVertex act(const Mat2& a, const LatticeVertex& s) { return vertex_normalize(a * s.basis, s.field); }

long displacement(const Mat2& a, const LatticeVertex& s) { return tree_distance(s, act(a, s)); }

std::vector<LatticeVertex> neighbors(const LatticeVertex& s)
{
    const Field& f = s.field;
    if (f.kind != Field::Kind::Padic)
        fail(ErrorKind::HypothesisViolated, "neighbour enumeration needs a finite residue field");
    std::vector<LatticeVertex> out;
    Elem pi = f.pi_pow(1);
    for (long k = 0; k < f.p; ++k)
        out.push_back(vertex_normalize(s.basis * Mat2{1, 0, Elem(k), pi}, f));
    out.push_back(vertex_normalize(s.basis * Mat2{pi, 0, 0, 1}, f));
    return out;
}

LatticeVertex step_toward(const LatticeVertex& s, const LatticeVertex& t)
{
    const Field& f = s.field;
    Mat2 X = s.basis.inverse() * t.basis;
    long mv = minval(f, X);
    Elem sc = f.pi_pow(-mv);
    X = {X.a * sc, X.b * sc, X.c * sc, X.d * sc};
    if (f.valuation(X.det()) == 0)
        fail(ErrorKind::HypothesisViolated, "step_toward needs distinct vertices");
    Elem x1 = X.a, x2 = X.c;
    if (std::min(f.valuation(x1), f.valuation(x2)) != 0) {
        x1 = X.b;
        x2 = X.d;
    }
    Elem pi = f.pi_pow(1);
    if (f.valuation(x1) == 0) {
        Elem k = f.truncate_below(x2 / x1, 1);
        return vertex_normalize(s.basis * Mat2{1, 0, k, pi}, f);
    }
    return vertex_normalize(s.basis * Mat2{pi, 0, 0, 1}, f);
}

void require_sl2(const Mat2& a, const Field& f)
{
    for (const Elem* e : {&a.a, &a.b, &a.c, &a.d})
        f.check(*e);
    if (!(a.det() == Elem(1)))
        fail(ErrorKind::NotSL2, "determinant is " + a.det().str());
}

long translation_length(const Mat2& a, const Field& f)
{
    require_sl2(a, f);
    long v = f.valuation(a.trace());
    if (v == kInfValuation)
        return 0;
    return 2 * std::max(0L, -v);
}

OracleResult translation_length_oracle(const Mat2& a, const Field& f, long max_steps)
{
    require_sl2(a, f);
    OracleResult r;
    LatticeVertex s = base_vertex(f);
    long ds = displacement(a, s);
    r.start_displacement = ds;
    long vt = f.valuation(a.trace());
    if (vt != kInfValuation && vt < 0) {
        LatticeVertex w = vertex_normalize(Mat2{1, 0, 0, Elem(1) / a.trace()}, f);
        long dw = displacement(a, w);
        if (dw < ds) {
            s = w;
            ds = dw;
        }
    }
    const bool scan = f.kind == Field::Kind::Padic;
    r.method = scan ? "neighbour-scan" : "geodesic-step";
    for (; r.steps < max_steps; ++r.steps) {
        if (ds == 0) {
            r.certified = true;
            break;
        }
        std::optional<LatticeVertex> best;
        long bd = ds;
        if (scan) {
            for (auto& n : neighbors(s)) {
                long dn = displacement(a, n);
                if (dn < bd) {
                    bd = dn;
                    best = n;
                }
            }
        } else {
            LatticeVertex n = step_toward(s, act(a, s));
            long dn = displacement(a, n);
            if (dn < bd) {
                bd = dn;
                best = n;
            }
        }
        if (!best) {
            r.certified = true;
            break;
        }
        s = *best;
        ds = bd;
    }
    r.length = ds;
    r.witness = s;
    return r;
}

std::vector<LatticeVertex> tree_ball(const LatticeVertex& s, int radius)
{
    std::vector<LatticeVertex> out{s};
    std::set<std::string> seen{s.key()};
    size_t lo = 0;
    for (int r = 0; r < radius; ++r) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i)
            for (auto& n : neighbors(out[i]))
                if (seen.insert(n.key()).second)
                    out.push_back(n);
        lo = hi;
    }
    return out;
}

bool bipartite_on_ball(const Mat2& a, const Field& f, int r)
{
    require_sl2(a, f);
    for (const auto& s : tree_ball(base_vertex(f), r))
        if (displacement(a, s) % 2 != 0)
            return false;
    return true;
}

void require_in_stabilizer(const Mat2& x, const Field& f, long t)
{
    require_sl2(x, f);
    if (f.valuation(x.a) < 0 || f.valuation(x.b) < 0 || f.valuation(x.d) < 0)
        fail(ErrorKind::NotInStabilizer, "entries must be integral");
    if (f.valuation(x.c) < t)
        fail(ErrorKind::NotInStabilizer, "lower-left entry has valuation below " + std::to_string(t));
}

CommutatorCheck arc_commutator_check(long t, const Mat2& x, const Mat2& y, const Field& f)
{
    if (t < 1)
        fail(ErrorKind::HypothesisViolated, "t must be positive");
    require_in_stabilizer(x, f, t);
    require_in_stabilizer(y, f, t);
    Mat2 A = x * y * x.inverse() * y.inverse();
    CommutatorCheck c;
    c.valuation = f.valuation(A.trace() - Elem(2));
    c.holds = c.valuation >= t;
    return c;
}

namespace {

Elem random_unit(Rng& rng, const Field& f)
{
    if (f.kind == Field::Kind::Padic) {
        long u;
        do
            u = rng.uniform(1, 3 * f.p);
        while (u % f.p == 0);
        return Elem(rng.coin() ? u : -u);
    }
    long c0 = rng.uniform(1, 4) * (rng.coin() ? 1 : -1);
    long c1 = rng.uniform(-3, 3);
    return Elem(Poly(std::vector<Rat>{Rat(c0), Rat(c1)}), Poly::constant(1));
}

Elem random_scalar(Rng& rng, const Field& f, long emin, long emax)
{
    return random_unit(rng, f) * f.pi_pow(rng.uniform(emin, emax));
}

} // namespace

Mat2 random_sl2(Rng& rng, const Field& f, int word_length)
{
    Mat2 m = Mat2::identity();
    Elem pi = f.pi_pow(1), ipi = f.pi_pow(-1);
    for (int i = 0; i < word_length; ++i) {
        switch (rng.uniform_int(0, 3)) {
        case 0: m = m * Mat2{1, random_scalar(rng, f, -2, 2), 0, 1}; break;
        case 1: m = m * Mat2{1, 0, random_scalar(rng, f, -2, 2), 1}; break;
        case 2: m = m * Mat2{pi, 0, 0, ipi}; break;
        default: m = m * Mat2{ipi, 0, 0, pi}; break;
        }
    }
    return m;
}

Mat2 random_stabilizer(Rng& rng, const Field& f, long t, int word_length)
{
    Mat2 m = Mat2::identity();
    for (int i = 0; i < word_length; ++i) {
        switch (rng.uniform_int(0, 2)) {
        case 0: m = m * Mat2{1, random_scalar(rng, f, 0, 2), 0, 1}; break;
        case 1: m = m * Mat2{1, 0, random_scalar(rng, f, t, t + 2), 1}; break;
        default: {
            Elem u = random_unit(rng, f);
            m = m * Mat2{u, 0, 0, Elem(1) / u};
            break;
        }
        }
    }
    return m;
}

} // namespace slopebound
