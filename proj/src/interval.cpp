#include "slopebound/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopebound {

namespace {

void set_q(mpfr_t out, const Rat& x, mpfr_rnd_t rnd) { mpfr_set_q(out, x.backend().data(), rnd); }

std::string format(mpfr_srcptr x, unsigned digits, mpfr_rnd_t rnd)
{
    char* buf = nullptr;
    const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : (rnd == MPFR_RNDU ? "%.*RUe" : "%.*RNe");
    mpfr_asprintf(&buf, fmt, static_cast<int>(digits), x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

} // namespace

Interval::Interval(mpfr_prec_t bits)
{
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o)
{
    mpfr_init2(lo_, o.bits());
    mpfr_init2(hi_, o.bits());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.bits())
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o)
{
    if (this != &o) {
        mpfr_set_prec(lo_, o.bits());
        mpfr_set_prec(hi_, o.bits());
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept
{
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

mpfr_prec_t Interval::join(const Interval& o) const { return std::max(bits(), o.bits()); }

Interval Interval::of(const Rat& x, mpfr_prec_t bits)
{
    Interval r(bits);
    set_q(r.lo_, x, MPFR_RNDD);
    set_q(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::of(long x, mpfr_prec_t bits)
{
    Interval r(bits);
    mpfr_set_si(r.lo_, x, MPFR_RNDD);
    mpfr_set_si(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::of(const Int& x, mpfr_prec_t bits)
{
    Interval r(bits);
    mpfr_set_z(r.lo_, x.backend().data(), MPFR_RNDD);
    mpfr_set_z(r.hi_, x.backend().data(), MPFR_RNDU);
    return r;
}

Interval Interval::ln2(mpfr_prec_t bits)
{
    Interval r(bits);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const
{
    Interval r(join(o));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const
{
    Interval r(join(o));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const
{
    Interval r(bits());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const
{
    Interval r(join(o));
    mpfr_t t;
    mpfr_init2(t, r.bits());
    mpfr_srcptr a[2] = {lo_, hi_};
    mpfr_srcptr b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : a)
        for (auto y : b) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_))
                mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_))
                mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const
{
    if (o.contains_zero())
        throw std::domain_error("interval division by an interval containing zero");
    Interval inv(o.bits());
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

Interval Interval::log() const
{
    if (mpfr_sgn(lo_) <= 0)
        throw std::domain_error("log of non-positive interval");
    Interval r(bits());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log2() const
{
    if (mpfr_sgn(lo_) <= 0)
        throw std::domain_error("log2 of non-positive interval");
    Interval r(bits());
    mpfr_log2(r.lo_, lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const
{
    Interval r(bits());
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const
{
    if (mpfr_sgn(lo_) < 0)
        throw std::domain_error("sqrt of negative interval");
    Interval r(bits());
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::root(unsigned long m) const
{
    if (mpfr_sgn(lo_) < 0)
        throw std::domain_error("root of negative interval");
    Interval r(bits());
    mpfr_rootn_ui(r.lo_, lo_, m, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, m, MPFR_RNDU);
    return r;
}

Interval Interval::pow(unsigned long e) const
{
    if (mpfr_sgn(lo_) < 0)
        throw std::domain_error("pow of negative interval");
    Interval r(bits());
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

bool Interval::certainly_less(const Rat& x) const
{
    return mpfr_cmp_q(hi_, x.backend().data()) < 0;
}

bool Interval::certainly_greater(const Rat& x) const
{
    return mpfr_cmp_q(lo_, x.backend().data()) > 0;
}

std::string Interval::lo_str(unsigned digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_str(unsigned digits) const { return format(hi_, digits, MPFR_RNDU); }

std::string Interval::mid_str(unsigned digits) const
{
    mpfr_t m;
    mpfr_init2(m, bits() + 2);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    std::string s = format(m, digits, MPFR_RNDN);
    mpfr_clear(m);
    return s;
}

double Interval::approx() const
{
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const
{
    mpfr_t w;
    mpfr_init2(w, bits());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

Interval operator+(const Interval& a, const Rat& b) { return a + Interval::of(b, a.bits()); }
Interval operator*(const Interval& a, const Rat& b) { return a * Interval::of(b, a.bits()); }
Interval operator*(const Rat& a, const Interval& b) { return Interval::of(a, b.bits()) * b; }

} // namespace slopebound
