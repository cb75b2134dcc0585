#pragma once

#include "slopebound/rational.hpp"

#include <mpfr.h>

#include <string>

namespace slopebound {

// Working precision derived from a decimal digit count, with guard bits.
struct Precision {
    unsigned digits = 50;
    mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 40); }
};

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
public:
    explicit Interval(mpfr_prec_t bits = 200);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval of(const Rat& x, mpfr_prec_t bits);
    static Interval of(long x, mpfr_prec_t bits);
    static Interval of(const Int& x, mpfr_prec_t bits);
    static Interval ln2(mpfr_prec_t bits);

    mpfr_prec_t bits() const { return mpfr_get_prec(lo_); }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;
    Interval operator-() const;

    Interval log() const;
    Interval log2() const;
    Interval exp() const;
    Interval sqrt() const;
    Interval root(unsigned long m) const;   // x^(1/m), x >= 0
    Interval pow(unsigned long e) const;    // x >= 0

    bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
    bool certainly_leq(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_) != 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    // Compare against a rational exactly: true only when certain.
    bool certainly_less(const Rat& x) const;
    bool certainly_greater(const Rat& x) const;

    std::string lo_str(unsigned digits) const;
    std::string hi_str(unsigned digits) const;
    std::string mid_str(unsigned digits) const;
    double approx() const;
    double width() const;

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t join(const Interval& o) const;
};

Interval operator+(const Interval& a, const Rat& b);
Interval operator*(const Interval& a, const Rat& b);
Interval operator*(const Rat& a, const Interval& b);

} // namespace slopebound
