#include "slopebound/bounds.hpp"

#include "slopebound/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>

namespace slopebound {

namespace {

Interval I(const Rat& x, Precision p) { return Interval::of(x, p.bits()); }
Interval I(long x, Precision p) { return Interval::of(x, p.bits()); }

Interval ln7(Precision p) { return I(7, p).log(); }

BoundStatus classify(const Interval& diff)
{
    Rat eps(1, 10000000000L);
    if (diff.certainly_greater(eps))
        return BoundStatus::Holds;
    if (diff.certainly_less(-eps))
        return BoundStatus::Fails;
    return BoundStatus::Inconclusive;
}

double lower_double(const Interval& x) { return mpfr_get_d(x.lo(), MPFR_RNDD); }

} // namespace

const char* status_name(BoundStatus s)
{
    switch (s) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Fails: return "fails";
    case BoundStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

BoundReport compare_exact(const std::string& name, const Rat& lhs, const Rat& rhs)
{
    BoundReport r;
    r.name = name;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.margin = to_string(rhs - lhs);
    r.exact = true;
    r.status = lhs <= rhs ? BoundStatus::Holds : BoundStatus::Fails;
    return r;
}

BoundReport compare_interval(const std::string& name, const Interval& lhs, const Interval& rhs, Precision prec)
{
    BoundReport r;
    r.name = name;
    r.lhs = lhs.hi_str(prec.digits);
    r.rhs = rhs.lo_str(prec.digits);
    Interval diff = rhs - lhs;
    r.margin = diff.lo_str(prec.digits);
    r.status = classify(diff);
    return r;
}

Rat tau_of_q(const Rat& q)
{
    if (q <= 1)
        fail(ErrorKind::HypothesisViolated, "q must exceed 1");
    return (7 * q - 1) / (q - 1);
}

int phi_argmin(const Rat& tau, const Rat& n)
{
    if (tau <= 1)
        fail(ErrorKind::HypothesisViolated, "tau must exceed 1");
    if (n < 1)
        fail(ErrorKind::HypothesisViolated, "phi argument must be at least 1");
    for (long m = 1; m < 100000; ++m)
        if (rpow(tau, 2 * m * (m + 1)) >= n)
            return static_cast<int>(m);
    fail(ErrorKind::CapExceeded, "phi argmin search exceeded 1e5");
}

int phi_window(const Rat& n)
{
    // ceil(log2 n) for n >= 1
    Int c = ceil_rat(n);
    int k = 0;
    while (ipow(Int(2), static_cast<unsigned long>(k)) < c)
        ++k;
    return k + 2;
}

PhiValue phi_tau(const Rat& tau, const Rat& n, Precision prec)
{
    PhiValue v;
    v.argmin = phi_argmin(tau, n);
    v.window = phi_window(n);
    v.in_window = v.argmin <= v.window;
    Interval t = I(tau, prec);
    v.value = t.pow(static_cast<unsigned long>(2 * v.argmin + 2)) * I(n, prec).root(static_cast<unsigned long>(v.argmin)) /
              I(tau - 1, prec);
    v.log_value = v.value.log();
    return v;
}

QTauChoice choose_q_tau(const Rat& x, Precision prec)
{
    if (x <= 1)
        fail(ErrorKind::HypothesisViolated, "x must exceed 1");
    QTauChoice c;
    Interval L = I(x, prec).log();
    Interval s = (L / (I(2, prec) * ln7(prec))).sqrt();
    mpfr_t flo, fhi;
    mpfr_init2(flo, s.bits());
    mpfr_init2(fhi, s.bits());
    mpfr_floor(flo, s.lo());
    mpfr_floor(fhi, s.hi());
    bool certain = mpfr_equal_p(flo, fhi) != 0;
    long fl = mpfr_get_si(flo, MPFR_RNDN);
    mpfr_clear(flo);
    mpfr_clear(fhi);
    if (!certain)
        fail(ErrorKind::HypothesisViolated, "floor in the choice of mu is not decided at this precision");
    c.mu = static_cast<int>(fl + 1);
    c.q = Rat(12 * c.mu + 19, 7);
    c.tau = tau_of_q(c.q);

    Interval qbound = (I(6, prec) * (I(2, prec) * L / ln7(prec)).sqrt() + Rat(31)) * Rat(1, 7);
    c.cert1 = compare_interval("precalculus(1): q <= (6 (2 ln x/ln 7)^(1/2) + 31)/7", I(c.q, prec), qbound, prec);
    if (c.q <= 1)
        c.cert1.status = BoundStatus::Fails;
    auto phi = phi_tau(c.tau, x, prec);
    Interval rhs = I(2, prec) * (I(2, prec) * ln7(prec) * L).sqrt() + I(4, prec) * ln7(prec) + Rat(1);
    c.cert2 = compare_interval("precalculus(2): ln phi_tau(x) <= 2 (2 ln 7 ln x)^(1/2) + 4 ln 7 + 1", phi.log_value,
                               rhs, prec);
    c.cert2.note = "argmin m = " + std::to_string(phi.argmin);
    return c;
}

Interval f_calculus(const Rat& x, Precision prec)
{
    Interval L = I(x, prec).log();
    Interval l7 = ln7(prec);
    Interval two = I(2, prec);
    Interval a = two * (two * l7 * L).sqrt();
    Interval b = (I(6, prec) * (two * L / l7).sqrt() + Rat(31)).log();
    Interval c = (L / Interval::ln2(prec.bits()) + Rat(1)).log();
    return a + b + c - L;
}

Interval xfprime_calculus(const Rat& x, Precision prec)
{
    Interval L = I(x, prec).log();
    Interval l7 = ln7(prec);
    Interval two = I(2, prec);
    Interval alpha = two * (two * l7).sqrt();
    Interval beta = I(6, prec) * (two / l7).sqrt();
    Interval gamma = I(31, prec);
    Interval delta = I(1, prec) / Interval::ln2(prec.bits());
    Interval sL = L.sqrt();
    return alpha / (two * sL) + beta / (two * beta * L + two * gamma * sL) + delta / (delta * L + Rat(1)) - I(1, prec);
}

Interval g_explicit(const Rat& x, Precision prec)
{
    Rat ax = x < 0 ? Rat(-x) : x;
    if (ax <= 1)
        fail(ErrorKind::HypothesisViolated, "g requires |x| > 1");
    Interval L = I(ax, prec).log();
    Interval l7 = ln7(prec);
    Interval two = I(2, prec);
    Interval p1 = I(6, prec) * (two * L / l7).sqrt() + Rat(31);
    Interval p2 = L / Interval::ln2(prec.bits()) + Rat(1);
    Interval p3 = (I(1, prec) + two * (two * l7 * L).sqrt()).exp();
    return I(12348, prec) * p1 * p2 * p3;
}

bool MonotoneSweep::ok() const
{
    return failures == 0 && inconclusive == 0 && f334_vs_f333.holds() && xfprime_333_positive.holds() &&
           xfprime_334_negative.holds();
}

MonotoneSweep f_monotone_check(long lo, long hi, Precision prec, bool serial)
{
    if (lo < 333 || hi < lo || hi > 1000001)
        fail(ErrorKind::HypothesisViolated, "monotone range must lie in [333, 10^6 + 1]");
    MonotoneSweep out;
    out.lo = lo;
    out.hi = hi;
    const long block = 2048;
    const long nblocks = (hi - lo + block - 1) / block;  // pairs (n, n+1) for n in [lo, hi)
    struct Part {
        long fails = 0, inconc = 0, checked = 0;
        long worst_n = -1;
        double worst = std::numeric_limits<double>::infinity();
    };
    std::vector<Part> parts(static_cast<size_t>(std::max<long>(nblocks, 0)));
    auto run_block = [&](long b) {
        Part& pt = parts[static_cast<size_t>(b)];
        long s = lo + b * block, e = std::min(hi, s + block);
        Interval prev = f_calculus(Rat(s), prec);
        for (long n = s; n < e; ++n) {
            Interval next = f_calculus(Rat(n + 1), prec);
            Interval diff = prev - next;
            BoundStatus st = classify(diff);
            pt.checked++;
            if (st == BoundStatus::Fails)
                pt.fails++;
            else if (st == BoundStatus::Inconclusive)
                pt.inconc++;
            double d = lower_double(diff);
            if (d < pt.worst) {
                pt.worst = d;
                pt.worst_n = n;
            }
            prev = std::move(next);
        }
    };
    if (serial) {
        for (long b = 0; b < nblocks; ++b)
            run_block(b);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (long b = 0; b < nblocks; ++b)
            run_block(b);
    }
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& pt : parts) {
        out.failures += pt.fails;
        out.inconclusive += pt.inconc;
        out.checked += pt.checked;
        if (pt.worst < worst) {
            worst = pt.worst;
            out.worst_n = pt.worst_n;
        }
    }
    if (out.checked > 0) {
        Interval diff = f_calculus(Rat(out.worst_n), prec) - f_calculus(Rat(out.worst_n + 1), prec);
        out.worst_margin = diff.lo_str(prec.digits);
    }
    out.f334_vs_f333 = compare_interval("f(334) < f(333)", f_calculus(Rat(334), prec), f_calculus(Rat(333), prec), prec);
    Interval zero = I(0, prec);
    out.xfprime_333_positive = compare_interval("x f'(x) > 0 at 333", zero, xfprime_calculus(Rat(333), prec), prec);
    out.xfprime_334_negative = compare_interval("x f'(x) < 0 at 334", xfprime_calculus(Rat(334), prec), zero, prec);
    return out;
}

KnotData KnotData::make(long g1, long m1, long g2, long m2, long q1, long delta)
{
    KnotData d;
    d.g1 = g1;
    d.m1 = m1;
    d.g2 = g2;
    d.m2 = m2;
    d.chi1 = 2 - 2 * g1 - m1;
    d.chi2 = 2 - 2 * g2 - m2;
    d.q1 = q1;
    d.delta = delta;
    d.validate();
    return d;
}

void KnotData::validate() const
{
    if (m1 < 1 || m2 < 1 || g1 < 0 || g2 < 0)
        fail(ErrorKind::HypothesisViolated, "genera must be non-negative and boundary counts positive");
    if (chi1 != 2 - 2 * g1 - m1 || chi2 != 2 - 2 * g2 - m2)
        fail(ErrorKind::HypothesisViolated, "chi_i must equal 2 - 2 g_i - m_i");
    if (q1 < 0 || delta < 0)
        fail(ErrorKind::HypothesisViolated, "q1 and Delta are non-negative");
}

Interval LogTerm::eval(Precision prec) const { return I(coeff, prec) * I(Rat(arg), prec).log2(); }

std::string LogTerm::str() const { return to_string(coeff) + "*log2(" + to_string(arg) + ")"; }

LogTerm kappa_easy(const KnotData& d)
{
    d.validate();
    if (d.g2 < 2)
        fail(ErrorKind::HypothesisViolated, "easy kappa bound needs g2 >= 2");
    if (d.delta < 1)
        fail(ErrorKind::HypothesisViolated, "Delta must be non-zero");
    return LogTerm{Rat(2 * d.m2 * d.m2 * d.delta, d.g2 - 1), Int(2 * d.g2 - 2)};
}

Interval kappa_hard(const KnotData& d, const Rat& theta, const Rat& q, Precision prec)
{
    d.validate();
    if (theta < -d.chi2 || theta < 1)
        fail(ErrorKind::HypothesisViolated, "theta must be a positive integer >= |chi2|");
    Rat tau = tau_of_q(q);
    auto phi = phi_tau(tau, theta, prec);
    Interval th = I(theta, prec);
    return I(Rat(36) * q * d.m2 / d.m1, prec) * phi.value * (I(2, prec) * th).log2() * I(-d.chi1, prec) / th;
}

Interval kappa_explicit(const KnotData& d, Precision prec)
{
    d.validate();
    if (-d.chi2 < 333)
        fail(ErrorKind::HypothesisViolated, "explicit bound needs |chi2| >= 333");
    return g_explicit(Rat(-d.chi2), prec) * I(Rat(d.m2 * (-d.chi1), d.m1 * (-d.chi2)), prec);
}

BoundReport kappa_hard_vs_explicit(const KnotData& d, Precision prec)
{
    Rat theta(-d.chi2);
    auto c = choose_q_tau(theta, prec);
    auto r = compare_interval("hard kappa bound <= explicit kappa bound", kappa_hard(d, theta, c.q, prec),
                              kappa_explicit(d, prec), prec);
    r.note = "theta = " + to_string(theta) + ", q = " + to_string(c.q);
    if (-d.chi1 == 0) {
        // both sides vanish
        r.status = BoundStatus::Holds;
        r.exact = true;
        r.margin = "0";
    }
    return r;
}

LogTerm easy_theorem_rhs(const KnotData& d, const ChainConfig& c)
{
    d.validate();
    if (d.g2 < 2)
        fail(ErrorKind::HypothesisViolated, "easy theorem needs g2 >= 2");
    return LogTerm{c.factor * Rat(4 * d.m2 * d.m2, d.g2 - 1), Int(2 * d.g2 - 2)};
}

BoundReport theorem_easy(const KnotData& d, Precision prec, const ChainConfig& c)
{
    if (d.delta < 1)
        fail(ErrorKind::HypothesisViolated, "Delta must be non-zero");
    LogTerm rhs = easy_theorem_rhs(d, c);
    Rat lhs = Rat(d.q1, d.delta) * Rat(d.q1, d.delta);
    auto r = compare_interval("(q1/Delta)^2 <= 4 m2^2 log2(2g2-2)/(g2-1)", I(lhs, prec), rhs.eval(prec), prec);
    return r;
}

BoundReport theorem_hard(const KnotData& d, Precision prec, const ChainConfig& c)
{
    d.validate();
    if (-d.chi2 < 333)
        fail(ErrorKind::HypothesisViolated, "hard theorem needs |chi2| >= 333");
    if (d.delta < 1)
        fail(ErrorKind::HypothesisViolated, "Delta must be non-zero");
    Rat lhs = Rat(d.q1 * d.q1, d.delta);
    Interval rhs = I(2 * c.factor, prec) * kappa_explicit(d, prec);
    return compare_interval("q1^2/Delta <= 2 g(chi2) m2 |chi1|/(m1 |chi2|)", I(lhs, prec), rhs, prec);
}

BoundReport theorem_chibound(const KnotData& d)
{
    d.validate();
    Rat lhs = std::max(-d.chi1, -d.chi2);
    return compare_exact("max |chi_i| <= m1 m2 Delta / 2", lhs, Rat(d.m1 * d.m2 * d.delta, 2));
}

BoundReport easy_corollary(long g, const Rat& r, Precision prec)
{
    if (g < 2)
        fail(ErrorKind::HypothesisViolated, "corollary needs genus >= 2");
    if (r == 0)
        fail(ErrorKind::HypothesisViolated, "slope r must be non-zero");
    Interval lhs = I(g - 1, prec) / (I(4, prec) * I(2 * g - 2, prec).log2());
    return compare_interval("(g-1)/(4 log2(2g-2)) <= r^2", lhs, I(r * r, prec), prec);
}

TorusKnot torus_knot_data(long p, long q)
{
    if (p < 2 || q < 2)
        fail(ErrorKind::HypothesisViolated, "torus knot parameters must be >= 2");
    if (std::gcd(p, q) != 1)
        fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
    return TorusKnot{p * q, (p - 1) * (q - 1) / 2};
}

bool easy_constant_consistent(const KnotData& d, const ChainConfig& c)
{
    LogTerm k = kappa_easy(d);
    // q1^2/Delta <= factor * 2 * kappa, so (q1/Delta)^2 <= factor * 2 * kappa / Delta
    LogTerm derived{c.factor * 2 * k.coeff / d.delta, k.arg};
    return derived == easy_theorem_rhs(d, c);
}

Interval f1_hard(const Rat& x, Precision prec) { return I(2, prec) * g_explicit(x, prec) / I(x, prec); }

Interval f0_easy(const Rat& x, Precision prec)
{
    if (x <= 1)
        fail(ErrorKind::HypothesisViolated, "f0 needs x > 1");
    return I(4, prec) * I(2 * x - 2, prec).log2() / I(x - 1, prec);
}

QualitativeDerivation qualitative_derivation(const KnotData& d, Precision prec)
{
    d.validate();
    QualitativeDerivation q;
    Rat bound(d.m1 * d.m2 * d.delta, 2);
    q.chibound = compare_exact("|chi1| <= m1 m2 Delta / 2", Rat(-d.chi1), bound);
    // B <= C  iff  |chi1| / (m1 Delta) <= m2 / 2, since f1 > 0
    Rat lhsB(-d.chi1 * d.m2, d.m1 * d.delta);  // B / f1
    Rat rhsC(d.m2 * d.m2, 2);                   // C / f1
    q.b_le_c = compare_exact("m2 |chi1| / (m1 Delta) <= m2^2 / 2 (common factor f1(|chi2|))", lhsB, rhsC);
    long ac = -d.chi2;
    if (ac < d.g2) {
        q.envelope = compare_exact("|chi2| >= g2", Rat(d.g2), Rat(ac));
    } else if (d.g2 >= 333 && ac > d.g2) {
        q.envelope = compare_interval("f1(|chi2|) <= f1(g2)", f1_hard(Rat(ac), prec), f1_hard(Rat(d.g2), prec), prec);
    } else {
        q.envelope = compare_exact("|chi2| >= g2", Rat(d.g2), Rat(ac));
        if (d.g2 < 333)
            q.envelope.note = "below the calculus threshold the step uses the decreasing envelope sup_{y>=x} f1(y)";
    }
    return q;
}

QualitativeSweep qualitative_check(const std::string& family, const Rat& eps, Precision prec)
{
    if (family != "f0" && family != "f1")
        fail(ErrorKind::Usage, "family must be f0 or f1");
    if (eps <= 0)
        fail(ErrorKind::HypothesisViolated, "eps must be positive");
    QualitativeSweep s;
    s.family = family;
    s.eps = eps;
    std::vector<Int> xs;
    for (unsigned k = 1; k <= 39; ++k)
        xs.push_back(ipow(Int(2), k));
    xs.push_back(Int(1000000000000LL));
    std::vector<Interval> vals;
    for (const Int& x : xs) {
        Rat rx(x);
        Interval f = family == "f0" ? f0_easy(rx, prec) : f1_hard(rx, prec);
        Interval w = (I(1 - eps, prec) * I(rx, prec).log()).exp();
        vals.push_back(w * f);
        s.grid.emplace_back(to_string(x), vals.back().mid_str(12));
    }
    s.last_value = vals.back().mid_str(12);
    long from = -1;
    for (long i = static_cast<long>(vals.size()) - 1; i > 0; --i) {
        if (vals[i].certainly_less(vals[i - 1]))
            from = i - 1;
        else
            break;
    }
    if (from >= 0)
        s.decreasing_from = static_cast<long>(xs[static_cast<size_t>(from)].convert_to<long long>());
    size_t n = vals.size();
    s.tail_decreasing = n >= 5;
    for (size_t i = n >= 5 ? n - 5 : 1; i < n && s.tail_decreasing; ++i)
        s.tail_decreasing = vals[i].certainly_less(vals[i - 1]);
    return s;
}

std::vector<long> log_grid(long lo, long hi)
{
    std::vector<long> out;
    for (long x = lo; x <= hi; x = std::max(x + 1, 17 * x / 16))
        out.push_back(x);
    if (out.empty() || out.back() != hi)
        out.push_back(hi);
    return out;
}

} // namespace slopebound
