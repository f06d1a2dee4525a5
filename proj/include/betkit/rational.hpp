#pragma once

#include <gmpxx.h>

#include <string>

namespace betkit {

// Exact rational arithmetic. mpq_class keeps values in canonical form
// (lowest terms, positive denominator) through all arithmetic, which is the
// representation invariant everything downstream relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", or "p/q" with q > 0 after sign normalization. The result
// is canonicalized, so "3/9" parses to 1/3. Throws ParseFailure on anything
// else (empty string, missing parts, zero denominator, stray characters).
Rational parse_rational(const std::string& text);

// Formats in lowest terms as "p/q", or "p" alone when the denominator is 1.
std::string format_rational(const Rational& value);

// 2^e for any integer e (negative exponents give exact fractions).
Rational pow2(long exponent);

// Exact integer power with a nonnegative exponent.
Rational pow_rational(const Rational& base, unsigned long exponent);

// Compares value against 2^(num/den), den > 0, exactly: returns -1, 0, or +1.
// Works by cross-powering: for value = p/q > 0 the comparison is
// p^den * 2^max(0,-num) vs q^den * 2^max(0,num) over the integers.
int compare_with_pow2(const Rational& value, const Integer& num, const Integer& den);
int compare_with_pow2(const Rational& value, const Rational& exponent);

// Floor of num/den over the integers (den > 0), exact for negatives.
Integer floor_div(const Integer& num, const Integer& den);

// floor(x) for a rational x.
Integer floor_rational(const Rational& x);

// Double approximation of log2(x) for strictly positive x, accurate to about
// 1 ulp even for values whose numerator and denominator overflow double.
// Report-only: never used inside exactness-bearing checks.
double log2_approx(const Rational& x);

}  // namespace betkit
