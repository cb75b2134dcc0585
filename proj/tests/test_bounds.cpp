#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopebound/bounds.hpp"
#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"

#include <cmath>

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

const Precision P{50};

long double ld(const Rat& r) { return static_cast<long double>(r.convert_to<double>()); }

// min over m of tau^(2m+2) n^(1/m) / (tau - 1), in logs
long double phi_brute_log(long double tau, long double n, int* arg = nullptr)
{
    long double best = INFINITY;
    for (int m = 1; m <= 400; ++m) {
        long double v = (2 * m + 2) * std::log(tau) + std::log(n) / m - std::log(tau - 1);
        if (v < best - 1e-15L) {
            best = v;
            if (arg)
                *arg = m;
        }
    }
    return best;
}

long double f_ref(long double x)
{
    long double L = std::log(x), l7 = std::log(7.0L);
    return 2 * std::sqrt(2 * l7 * L) + std::log(6 * std::sqrt(2 * L / l7) + 31) + std::log(L / std::log(2.0L) + 1) - L;
}

long double g_ref(long double x)
{
    long double L = std::log(x), l7 = std::log(7.0L);
    return 12348 * (6 * std::sqrt(2 * L / l7) + 31) * (L / std::log(2.0L) + 1) * std::exp(1 + 2 * std::sqrt(2 * l7 * L));
}

bool close(long double a, long double b, long double rel = 1e-12L) { return std::fabs(a - b) <= rel * std::fabs(b); }

} // namespace

TEST_CASE("tau")
{
    CHECK(tau_of_q(Rat(2)) == 13);
    CHECK(tau_of_q(Rat(31, 7)) == Rat(210, 24));
}

TEST_CASE("phi at n = 1")
{
    for (Rat tau : {Rat(2), Rat(13), Rat(35, 4)}) {
        auto v = phi_tau(tau, Rat(1), P);
        CHECK(v.argmin == 1);
        CHECK(v.in_window);
        Interval expect = Interval::of(tau, P.bits()).pow(4) / Interval::of(tau - 1, P.bits());
        CHECK_FALSE((v.value - expect).certainly_positive());
        CHECK_FALSE((v.value - expect).certainly_negative());
    }
}

TEST_CASE("phi argmin is global and in the window")
{
    Rng rng(1, 0);
    for (int i = 0; i < 400; ++i) {
        Rat tau(rng.uniform(9, 60), rng.uniform(1, 8));
        if (tau <= 1)
            continue;
        long n = rng.coin(1, 2) ? rng.uniform(1, 1000) : rng.uniform(1, 2000000000);
        auto v = phi_tau(tau, Rat(n), P);
        int arg = 0;
        long double ref = phi_brute_log(ld(tau), n, &arg);
        CHECK(v.in_window);
        CHECK(v.argmin <= phi_window(Rat(n)));
        CHECK(close(static_cast<long double>(v.log_value.approx()), ref, 1e-12L));
        CHECK(v.argmin == arg);
    }
}

TEST_CASE("phi is monotone in n")
{
    Rng rng(2, 0);
    for (int i = 0; i < 1000; ++i) {
        Rat tau(rng.uniform(8, 80), rng.uniform(1, 7));
        if (tau <= 1)
            continue;
        long n = rng.uniform(1, 5000000);
        auto a = phi_tau(tau, Rat(n), P), b = phi_tau(tau, Rat(n + 1), P);
        CHECK_FALSE(b.value.certainly_less(a.value));
    }
}

TEST_CASE("choice of q and tau")
{
    auto c2 = choose_q_tau(Rat(2), P);
    CHECK(c2.mu == 1);
    CHECK(c2.q == Rat(31, 7));
    CHECK(c2.cert1.holds());
    CHECK(c2.cert2.holds());
    auto c = choose_q_tau(Rat(333), P);
    CHECK(c.cert1.holds());
    CHECK(c.cert2.holds());
    long mu = static_cast<long>(std::floor(std::sqrt(std::log(333.0) / (2 * std::log(7.0))))) + 1;
    CHECK(c.mu == mu);
    CHECK(c.q == Rat(12 * mu + 19, 7));
    CHECK(c.tau == tau_of_q(c.q));
    CHECK(kind_of([] { choose_q_tau(Rat(1), P); }) == ErrorKind::HypothesisViolated);
    for (long x : log_grid(2, 1000000)) {
        auto k = choose_q_tau(Rat(x), P);
        CHECK(k.cert1.holds());
        CHECK(k.cert2.holds());
    }
}

TEST_CASE("log grid")
{
    auto g = log_grid(2, 1000000);
    CHECK(g.front() == 2);
    CHECK(g.back() == 1000000);
    for (size_t i = 1; i < g.size(); ++i)
        CHECK(g[i] > g[i - 1]);
}

TEST_CASE("calculus function against long double")
{
    for (long x : {2L, 10L, 333L, 334L, 5000L, 1000000L}) {
        CHECK(close(static_cast<long double>(f_calculus(Rat(x), P).approx()), f_ref(x), 1e-12L));
        CHECK(close(static_cast<long double>(g_explicit(Rat(x), P).approx()), g_ref(x), 1e-12L));
        long double h = 1e-4L * x;
        long double num = x * (f_ref(x + h) - f_ref(x - h)) / (2 * h);
        CHECK(std::fabs(static_cast<long double>(xfprime_calculus(Rat(x), P).approx()) - num) < 1e-6L);
    }
}

TEST_CASE("calculus sign facts and sweep")
{
    CHECK(f_calculus(Rat(334), P).certainly_less(f_calculus(Rat(333), P)));
    CHECK(xfprime_calculus(Rat(333), P).certainly_positive());
    CHECK(xfprime_calculus(Rat(334), P).certainly_negative());
    auto s = f_monotone_check(333, 2333, P);
    CHECK(s.ok());
    CHECK(s.checked == 2000);
    CHECK(s.failures == 0);
    CHECK(s.f334_vs_f333.holds());
    auto r = f_monotone_check(333, 2333, P, true);
    CHECK(r.worst_n == s.worst_n);
    CHECK(r.worst_margin == s.worst_margin);
    CHECK(kind_of([] { f_monotone_check(300, 400, P); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("kappa bounds")
{
    auto d = KnotData::make(1, 1, 4, 1, 1, 2);  // m2 = 1, Delta = 2, g2 = 4
    auto k = kappa_easy(d);
    CHECK(k.coeff == Rat(4, 3));
    CHECK(k.arg == 6);
    CHECK(close(static_cast<long double>(k.eval(P).approx()), 4.0L / 3 * std::log2(6.0L), 1e-15L));
    auto e = KnotData::make(3, 2, 166, 2, 1, 10);  // chi2 = 2 - 332 - 2 = -332
    CHECK(e.chi2 == -332);
    CHECK(kind_of([&] { kappa_explicit(e, P); }) == ErrorKind::HypothesisViolated);
    for (int i = 0; i < 100; ++i) {
        Rng rng(7, static_cast<std::uint64_t>(i));
        auto kd = random_knot_data(rng);
        CHECK(easy_constant_consistent(kd));
        if (-kd.chi2 >= 333)
            CHECK(kappa_hard_vs_explicit(kd, P).holds());
    }
}

TEST_CASE("theorems")
{
    auto tk = torus_knot_data(3, 5);
    CHECK(tk.slope == 15);
    CHECK(tk.genus == 4);
    auto r = easy_corollary(tk.genus, Rat(tk.slope), P);
    CHECK(r.holds());
    CHECK(std::fabs(std::stod(r.lhs) - 3 / (4 * std::log2(6.0))) < 1e-12);
    CHECK(std::stod(r.lhs) > 0.2901);
    CHECK(std::stod(r.lhs) < 0.2902);
    auto tr = torus_knot_data(2, 3);
    CHECK(tr.slope == 6);
    CHECK(tr.genus == 1);
    CHECK(kind_of([] { torus_knot_data(2, 4); }) == ErrorKind::NotCoprime);
    CHECK(kind_of([] { easy_corollary(1, Rat(6), P); }) == ErrorKind::HypothesisViolated);

    // |chi_i| = m1 m2 Delta / 2 exactly: chi = -4 with m1 = m2 = 2, Delta = 2
    auto eq = KnotData::make(2, 2, 2, 2, 1, 2);
    CHECK(eq.chi1 == -4);
    CHECK(eq.chi2 == -4);
    auto cb = theorem_chibound(eq);
    CHECK(cb.holds());
    CHECK(cb.margin == "0");
    auto low = KnotData::make(2, 1, 1, 1, 1, 2);
    CHECK(kind_of([&] { theorem_easy(low, P); }) == ErrorKind::HypothesisViolated);
    auto d = KnotData::make(1, 1, 4, 1, 1, 2);
    CHECK(easy_theorem_rhs(d) == LogTerm{Rat(4, 3), 6});
}

TEST_CASE("qualitative decay")
{
    auto a = qualitative_check("f0", Rat(1, 2), P);
    CHECK(std::stod(a.last_value) < 1e-3);
    CHECK(a.tail_decreasing);
    CHECK(a.decreasing_from >= 0);
    CHECK(a.decreasing_from <= 8);
    auto b = qualitative_check("f0", Rat(1, 10), P);
    CHECK(b.tail_decreasing);
    for (int i = 0; i < 100; ++i) {
        Rng rng(11, static_cast<std::uint64_t>(i));
        CHECK(qualitative_derivation(random_knot_data(rng), P).ok());
    }
}
