#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace heptaknot {

// Exact rational scalar. GMP keeps the canonical form (lowest terms,
// positive denominator), which every sign decision below relies on.
using Rational = mpq_class;

// Accepts "123", "-4", "3/7", "-12.5". Decimal strings are scaled by a
// power of ten, so "0.1" means exactly 1/10.
Rational parse_rational(std::string_view text);

// Every finite double is a rational; this conversion is lossless.
Rational rational_from_double(double value);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

inline int sign_int(const Rational& q) { return sgn(q); }

}  // namespace heptaknot
