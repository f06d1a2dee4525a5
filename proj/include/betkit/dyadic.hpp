#pragma once

#include "betkit/rational.hpp"

namespace betkit {

// Directed-rounding dyadic arithmetic for certified comparisons against
// irrational targets (growth rates, 2^x for fractional x). A bound is a
// positive value mantissa * 2^exponent; Down bounds round toward zero,
// Up bounds round away, so products of like-rounded bounds stay on the same
// side of the true value.
enum class Rounding { Down, Up };

struct DyadicBound {
    Integer mantissa;  // strictly positive
    long exponent = 0;

    Rational value() const;
};

// Trims the mantissa to at most `precision_bits` bits, rounding in the given
// direction. Values already narrow enough are returned unchanged.
DyadicBound normalize(DyadicBound bound, unsigned precision_bits, Rounding rounding);

// Product with directed rounding at the given precision.
DyadicBound mul(const DyadicBound& a, const DyadicBound& b, unsigned precision_bits,
                Rounding rounding);

// base^k by binary powering, every step rounded in the given direction.
DyadicBound pow(const DyadicBound& base, unsigned long k, unsigned precision_bits,
                Rounding rounding);

// Dyadic bound on a positive rational: Down gives a value <= x, Up a
// value >= x, both within one unit in the last of `precision_bits` bits.
DyadicBound from_rational(const Rational& x, unsigned precision_bits,
                          Rounding rounding);

// Exact three-way comparison of two bounds' values.
int compare(const DyadicBound& a, const DyadicBound& b);

// Exact three-way comparison of a bound's value against a rational.
int compare(const DyadicBound& a, const Rational& x);

}  // namespace betkit
