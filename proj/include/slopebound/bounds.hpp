#pragma once

#include "slopebound/interval.hpp"
#include "slopebound/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slopebound {

enum class BoundStatus { Holds, Fails, Inconclusive };
const char* status_name(BoundStatus s);

struct BoundReport {
    std::string name;
    std::string lhs;
    std::string rhs;
    std::string margin;   // rhs - lhs
    BoundStatus status = BoundStatus::Inconclusive;
    bool exact = false;   // decided in rational arithmetic
    std::string note;
    bool holds() const { return status == BoundStatus::Holds; }
};

// Margins whose absolute value cannot be certified above this are inconclusive.
inline constexpr double kInconclusiveMargin = 1e-10;

BoundReport compare_exact(const std::string& name, const Rat& lhs, const Rat& rhs);
BoundReport compare_interval(const std::string& name, const Interval& lhs, const Interval& rhs, Precision prec);

// Global chain constant shared by the plane-geometry chain and the theorem checks.
struct ChainConfig {
    Rat factor = 1;
};

Rat tau_of_q(const Rat& q);  // (7q - 1)/(q - 1)

// Least m >= 1 with tau^(2m(m+1)) >= n. This is the smallest minimiser of
// tau^(2m+2) n^(1/m): for m > m' the comparison a_m <= a_m' is tau^(2mm') <= n.
int phi_argmin(const Rat& tau, const Rat& n);
int phi_window(const Rat& n);  // ceil(log2 n) + 2

struct PhiValue {
    int argmin = 1;
    int window = 1;
    bool in_window = true;
    Interval value;       // phi_tau(n)
    Interval log_value;   // ln phi_tau(n)
};
PhiValue phi_tau(const Rat& tau, const Rat& n, Precision prec);

struct QTauChoice {
    int mu = 1;
    Rat q;
    Rat tau;
    BoundReport cert1;  // 1 < q <= (6 (2 ln x / ln 7)^(1/2) + 31)/7
    BoundReport cert2;  // ln phi_tau(x) <= 2 (2 ln7 ln x)^(1/2) + 4 ln 7 + 1
};
QTauChoice choose_q_tau(const Rat& x, Precision prec);

// f(x) = 2(2 ln7 ln x)^(1/2) + ln(6 (2 ln x / ln 7)^(1/2) + 31) + ln(ln x / ln 2 + 1) - ln x
Interval f_calculus(const Rat& x, Precision prec);
// x f'(x)
Interval xfprime_calculus(const Rat& x, Precision prec);
// g(x) of the explicit hard bound, x = |chi|
Interval g_explicit(const Rat& x, Precision prec);

struct MonotoneSweep {
    long lo = 0, hi = 0;
    long checked = 0;
    long failures = 0;
    long inconclusive = 0;
    long worst_n = 0;          // n with the smallest certified f(n) - f(n+1)
    std::string worst_margin;
    BoundReport f334_vs_f333;
    BoundReport xfprime_333_positive;
    BoundReport xfprime_334_negative;
    bool ok() const;
};
// OpenMP over n with a deterministic merge; `serial` runs the reference loop.
MonotoneSweep f_monotone_check(long lo, long hi, Precision prec, bool serial = false);

struct KnotData {
    long g1 = 0, g2 = 0;
    long m1 = 1, m2 = 1;
    long chi1 = 0, chi2 = 0;
    long q1 = 1;
    long delta = 1;
    static KnotData make(long g1, long m1, long g2, long m2, long q1, long delta);
    void validate() const;  // chi_i = 2 - 2 g_i - m_i, m_i >= 1
};

// coefficient * log2(arg) / divisor, kept symbolic for constant comparisons.
struct LogTerm {
    Rat coeff;
    Int arg;
    bool operator==(const LogTerm&) const = default;
    Interval eval(Precision prec) const;
    std::string str() const;
};

LogTerm kappa_easy(const KnotData& d);  // 2 m2^2 Delta log2(2 g2 - 2)/(g2 - 1)
Interval kappa_hard(const KnotData& d, const Rat& theta, const Rat& q, Precision prec);
Interval kappa_explicit(const KnotData& d, Precision prec);

// Hard bound at theta = |chi2| with q from choose_q_tau, against the explicit closed form.
BoundReport kappa_hard_vs_explicit(const KnotData& d, Precision prec);

LogTerm easy_theorem_rhs(const KnotData& d, const ChainConfig& c = {});  // 4 m2^2 log2(2g2-2)/(g2-1)
BoundReport theorem_easy(const KnotData& d, Precision prec, const ChainConfig& c = {});
BoundReport theorem_hard(const KnotData& d, Precision prec, const ChainConfig& c = {});
BoundReport theorem_chibound(const KnotData& d);
BoundReport easy_corollary(long g, const Rat& r, Precision prec);

struct TorusKnot {
    long slope;
    long genus;
};
TorusKnot torus_knot_data(long p, long q);

// Easy kappa bound times the chain constant, divided by Delta^2, equals the
// easy theorem's right-hand side as a symbolic LogTerm.
bool easy_constant_consistent(const KnotData& d, const ChainConfig& c = {});

// f1(x) = 2 g(x)/x, the g-based instantiation of the hard qualitative function.
Interval f1_hard(const Rat& x, Precision prec);
Interval f0_easy(const Rat& x, Precision prec);  // 4 log2(2x - 2)/(x - 1)

struct QualitativeDerivation {
    BoundReport chibound;        // |chi1| <= m1 m2 Delta / 2
    BoundReport b_le_c;          // m2 |chi1| f1 / (m1 Delta) <= m2^2 f1 / 2
    BoundReport envelope;        // |chi2| >= g2 and, past the calculus threshold, f1(|chi2|) <= f1(g2)
    bool ok() const { return chibound.holds() && b_le_c.holds() && envelope.holds(); }
};
QualitativeDerivation qualitative_derivation(const KnotData& d, Precision prec);

struct QualitativeSweep {
    std::string family;   // "f0" or "f1"
    Rat eps;
    std::vector<std::pair<std::string, std::string>> grid;  // x, x^(1-eps) f(x) midpoint
    std::string last_value;
    long decreasing_from = -1;  // first grid x after which values decrease, -1 if never
    bool tail_decreasing = false;
};
QualitativeSweep qualitative_check(const std::string& family, const Rat& eps, Precision prec);

// Geometric integer grid on [lo, hi]: x_{k+1} = max(x_k + 1, floor(17 x_k / 16)).
std::vector<long> log_grid(long lo, long hi);

} // namespace slopebound
