#pragma once

#include <cstddef>

#include "betkit/dyadic.hpp"
#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/rational.hpp"
#include "betkit/strategy_rule.hpp"

namespace betkit {

// Exponential prediction-following strategy: starts at 1 and multiplies its
// capital by 2q on every bit that matches f's guess and by 2(1-q) on every
// miss. At a node sigma with z matches and o misses along the way the value
// is 2^{|sigma|} * q^z * (1-q)^o. Requires q in (0,1) (QOutOfRange). The
// result follows f when q > 1/2 and opposes it when q < 1/2.
MartingaleTable hoeffding(const Rational& q, const PredictionFunction& f, std::size_t depth);

// Streaming form of the same strategy for long paths.
StrategyRule hoeffding_rule(const Rational& q, const PredictionFunction& f);

// Certified enclosure of the per-step growth rate r = 2 * q^q * (1-q)^{1-q}
// for q in (1/2, 1). `lower.value() <= r <= upper.value()` with width at most
// 2^{-40}, and lower > 1 always (r itself exceeds 1 on this range, and the
// enclosure is refined until it certifies that). `base_power` is the exact
// rational r^base where base is q's denominator, the quantity every exact
// comparison against powers of r reduces to.
struct RateEnclosure {
    DyadicBound lower;
    DyadicBound upper;
    Rational base_power;
    unsigned long base = 1;
};

RateEnclosure r_of_q(const Rational& q);

// Exact rational r^n, defined whenever q * n is an integer (then both q*n and
// (1-q)*n are, and r^n = 2^n * q^{qn} * (1-q)^{(1-q)n} is rational). Throws
// PreconditionViolated otherwise, QOutOfRange for q outside (1/2, 1).
Rational r_power_exact(const Rational& q, unsigned long n);

// Tail census at length n: how many strings have strictly more than q*n
// correct f-guesses, and whether count * r^n <= 2^n. The bound comparison is
// exact: it cross-powers both sides by q's denominator, so no rounding enters
// even when q*n is not an integer. Requires q in (1/2, 1) and n <= 24.
struct TailCount {
    Integer count;
    bool bound_ok = false;
};

TailCount hoeffding_tail_count(std::size_t n, const Rational& q, const PredictionFunction& f);

// Truncated two-sided frequency mixture: sum over i = 1..truncation of
// 2^{-i} * (H_{q_i} + H_{p_i}) with q_i = 1/2 + 2^{-i-1}, p_i = 1/2 - 2^{-i-1},
// both components guessing constant 0. Root value is 2 - 2^{1-truncation}.
// Requires truncation >= 1 (TruncationInvalid).
MartingaleTable frequency_mixture(std::size_t depth, std::size_t truncation);

// The two halves of the mixture: the q-side sum (0-sided) and the p-side sum
// (1-sided), witnessing separability of their total.
struct FrequencyMixtureParts {
    MartingaleTable zero_sided;
    MartingaleTable one_sided;
};

FrequencyMixtureParts frequency_mixture_parts(std::size_t depth, std::size_t truncation);

// Streaming form of frequency_mixture for long paths.
StrategyRule frequency_mixture_rule(std::size_t truncation);

// Exact bound on the mass the truncation drops at the given depth relative to
// the untruncated mixture: 2^{depth - truncation + 1}. Every omitted component
// is at most 2^{depth} pointwise, so the omitted weighted sum stays below this.
Rational frequency_mixture_tail_bound(std::size_t depth, std::size_t truncation);

}  // namespace betkit
