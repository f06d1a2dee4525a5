#pragma once

#include <cstdint>

#include "betkit/bitstring.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// splitmix64: the standard 64-bit mixer. Deterministic across platforms, so
// generated fixtures and CLI output are byte-stable. Constants are the usual
// ones: increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB, shifts 30/27/31.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform draw from {0, ..., bound-1} by multiply-shift; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Length `length` sequence where each bit is 0 with probability
// `zero_probability` (a rational in [0, 1]): bit i is 0 exactly when the
// i-th splitmix64 draw is below floor(zero_probability * 2^64).
BitString biased_bits(const Rational& zero_probability, std::uint64_t seed,
                      std::size_t length);

}  // namespace betkit
