#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace colorlie {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// g = gcd(a,b) together with x, y such that a*x + b*y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

Integer floor_of(const Rational& q);

// q - floor(q), always in [0, 1).
Rational fractional_part(const Rational& q);

// Reduced fraction with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q" (q > 0 after reduction) or a bare integer "p".
Rational parse_fraction(std::string_view text);

// Always "p/q" form, q > 0, reduced ("0/1" for zero).
std::string format_fraction(const Rational& q);

}  // namespace colorlie
