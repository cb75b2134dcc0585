#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace slopebound {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Accepts "n", "-n", "n/d".
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, long e);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Largest k with p^k | n, n != 0.
long multiplicity(const Int& n, const Int& p);

} // namespace slopebound
