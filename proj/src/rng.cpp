#include "betkit/rng.hpp"

#include "betkit/errors.hpp"

namespace betkit {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    // Multiply-shift maps a 64-bit draw to {0,...,bound-1} with bias below
    // bound/2^64, which is immaterial for fixture generation.
    unsigned __int128 wide = static_cast<unsigned __int128>(next());
    return static_cast<std::uint64_t>((wide * bound) >> 64);
}

BitString biased_bits(const Rational& zero_probability, std::uint64_t seed,
                      std::size_t length) {
    if (zero_probability < 0 || zero_probability > 1) {
        throw QOutOfRange("zero probability must lie in [0, 1]");
    }
    // threshold = floor(p * 2^64), computed exactly.
    Integer scaled_num = zero_probability.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 64);
    Integer threshold = floor_div(scaled_num, zero_probability.get_den());

    SplitMix64 rng(seed);
    BitString bits;
    for (std::size_t i = 0; i < length; ++i) {
        Integer draw(static_cast<unsigned long>(0));
        // mpz from uint64 via two 32-bit halves keeps this correct on LLP64
        std::uint64_t u = rng.next();
        mpz_set_ui(draw.get_mpz_t(), static_cast<unsigned long>(u >> 32));
        mpz_mul_2exp(draw.get_mpz_t(), draw.get_mpz_t(), 32);
        mpz_add_ui(draw.get_mpz_t(), draw.get_mpz_t(),
                   static_cast<unsigned long>(u & 0xFFFFFFFFULL));
        bits.append(draw < threshold ? 0 : 1);
    }
    return bits;
}

}  // namespace betkit
