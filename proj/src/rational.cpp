#include "slopebound/rational.hpp"

#include "slopebound/errors.hpp"

#include <stdexcept>

namespace slopebound {

Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0)
            fail(ErrorKind::Usage, "zero denominator in '" + s + "'");
        return Rat(n, d);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e))
            throw;
        fail(ErrorKind::Usage, "cannot parse rational '" + s + "'");
    }
}

std::string to_string(const Rat& x)
{
    if (den(x) == 1)
        return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

std::string to_string(const Int& x) { return x.str(); }

Int ipow(const Int& base, unsigned long e)
{
    Int r = 1, b = base;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

Rat rpow(const Rat& base, long e)
{
    if (e >= 0)
        return Rat(ipow(num(base), e), ipow(den(base), e));
    if (base == 0)
        throw std::domain_error("negative power of zero");
    return Rat(ipow(den(base), -e), ipow(num(base), -e));
}

Int floor_rat(const Rat& x)
{
    Int q = num(x) / den(x);
    if (num(x) < 0 && q * den(x) != num(x))
        q -= 1;
    return q;
}

Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

long multiplicity(const Int& n, const Int& p)
{
    long k = 0;
    Int m = abs(n);
    while (m != 0 && m % p == 0) {
        m /= p;
        ++k;
    }
    return k;
}

} // namespace slopebound
