// Exact rational scalars: thin layer over GMP's mpq_class.
//
// Every scalar in the engine is an arbitrary-precision rational kept in
// canonical form (fully reduced, positive denominator).  No floating point
// anywhere.
#pragma once

#include <gmpxx.h>

#include <string>

namespace filaff {

using Rational = mpq_class;

// num/den, canonicalized.  Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" with optional leading sign, e.g. "3/4", "-2", "4/6"
// (the last canonicalizes to 2/3).  Throws std::invalid_argument on empty
// input, stray characters, or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Test support: fully reduced and positive denominator.
bool is_canonical(const Rational& q);

}  // namespace filaff
