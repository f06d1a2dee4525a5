#pragma once

#include <cstddef>
#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/martingale.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// A layered cover witness against dimension s: level k is a finite set of
// strings whose weighted mass sum 2^{-s|sigma|} stays below 2^{-k}, every
// member being longer than k.
struct STest {
    Rational s;
    std::vector<std::vector<BitString>> levels;
};

// Checks the two level invariants. Mass sums are compared exactly when
// s * |sigma| is an integer; otherwise each term is replaced by an exact
// dyadic upper bound with denominator 2^40, so a "yes" is always sound and a
// level within 2^{-40} of its budget per term may be conservatively rejected.
ValidationReport validate_stest(const STest& test);

// Smallest dyadic with denominator 2^40 strictly above 2^{-exponent}, or the
// exact power of two when the exponent is an integer. Exposed for tests.
Rational dyadic_upper_bound_pow2_neg(const Rational& exponent);

// A single-string betting component: starts at an exact power of two at or
// just below 2^{-q |sigma|} and doubles through every 0 of sigma, going all
// in on 0 at those positions, betting nowhere else. Extensions of sigma hold
// value 2^{zeros(sigma) + stored_exponent}.
struct ScaledStrategy {
    MartingaleTable table{0};
    // The integer exponent actually stored: table root is 2^{stored_exponent}.
    long stored_exponent = 0;
    // The exact target exponent -q * |sigma|; equals stored_exponent exactly
    // when integral, otherwise stored_exponent = floor(target_exponent).
    Rational target_exponent;
    bool exponent_integral = true;
};

// Builds the component for `sigma`. Requires |sigma| <= depth (DepthExceeded)
// and q >= 0 (QOutOfRange).
ScaledStrategy n_sigma(const BitString& sigma, const Rational& q, std::size_t depth);

// The dimension-betting strategy assembled from a layered cover: level j of
// the test is used with weight 2^{-(start_index + j)}, where start_index is
// the least integer with 2^{-start_index} < eps / 2. The root value is then
// provably below eps. Requires a valid test (PreconditionViolated), eps in
// (0,1) (EpsOutOfRange), at least one level (TestExhausted), and every used
// string within depth (DepthExceeded).
struct DimStrategy {
    MartingaleTable table{0};
    long start_index = 0;
    std::vector<Rational> level_weights;
};

DimStrategy dim_strategy(const STest& test, const Rational& eps, std::size_t depth);

}  // namespace betkit
