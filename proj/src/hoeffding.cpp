#include "betkit/hoeffding.hpp"

#include <utility>
#include <vector>

#include "betkit/errors.hpp"

namespace betkit {

namespace {

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Integer ipow2(unsigned long exponent) { return Integer(1) << exponent; }

void require_open_unit(const Rational& q, const char* where) {
    if (!(q > 0 && q < 1)) {
        throw QOutOfRange(std::string(where) + " requires q strictly between 0 and 1, got " +
                          format_rational(q));
    }
}

void require_upper_half(const Rational& q, const char* where) {
    if (!(q > Rational(1, 2) && q < 1)) {
        throw QOutOfRange(std::string(where) +
                          " requires q strictly between 1/2 and 1, got " + format_rational(q));
    }
}

// Streaming state for the exponential strategy: the capital is multiplied by
// 2q on a correct guess and 2(1-q) on a wrong one.
class HoeffdingState final : public RuleState {
public:
    HoeffdingState(Rational match_factor, Rational miss_factor, PredictionFunction f)
        : match_factor_(std::move(match_factor)),
          miss_factor_(std::move(miss_factor)),
          f_(std::move(f)),
          value_(1) {}

    Rational value() const override { return value_; }

    void advance(int bit) override {
        const int guess = f_(path_);
        value_ *= (bit == guess) ? match_factor_ : miss_factor_;
        path_.append(bit);
    }

    std::unique_ptr<RuleState> clone() const override {
        return std::make_unique<HoeffdingState>(*this);
    }

private:
    Rational match_factor_;
    Rational miss_factor_;
    PredictionFunction f_;
    Rational value_;
    BitString path_;
};

// Streaming state for the truncated frequency mixture. Component i carries
// its weight 2^{-i} folded into its starting value, so value() is a plain sum.
class FrequencyMixtureState final : public RuleState {
public:
    explicit FrequencyMixtureState(std::size_t truncation) {
        for (std::size_t i = 1; i <= truncation; ++i) {
            const Rational offset = pow2(-static_cast<long>(i) - 1);
            const Rational weight = pow2(-static_cast<long>(i));
            for (const Rational& bias :
                 {Rational(Rational(1, 2) + offset), Rational(Rational(1, 2) - offset)}) {
                Component component;
                component.zero_factor = 2 * bias;
                component.one_factor = 2 * (1 - bias);
                component.value = weight;
                components_.push_back(std::move(component));
            }
        }
    }

    Rational value() const override {
        Rational total = 0;
        for (const Component& component : components_) {
            total += component.value;
        }
        return total;
    }

    void advance(int bit) override {
        for (Component& component : components_) {
            component.value *= (bit == 0) ? component.zero_factor : component.one_factor;
        }
    }

    std::unique_ptr<RuleState> clone() const override {
        return std::make_unique<FrequencyMixtureState>(*this);
    }

private:
    struct Component {
        Rational zero_factor;
        Rational one_factor;
        Rational value;
    };

    std::vector<Component> components_;
};

}  // namespace

MartingaleTable hoeffding(const Rational& q, const PredictionFunction& f, std::size_t depth) {
    require_open_unit(q, "hoeffding");
    const Rational match_factor = 2 * q;
    const Rational miss_factor = 2 * (1 - q);

    MartingaleTable table(depth);
    table.root() = 1;
    for (std::size_t level = 0; level < depth; ++level) {
        const std::size_t width = std::size_t{1} << level;
        for (std::size_t offset = 0; offset < width; ++offset) {
            const Rational& here = table.at(level, offset);
            const int guess = f(BitString::from_level_offset(level, offset));
            table.at(level + 1, 2 * offset) = here * (guess == 0 ? match_factor : miss_factor);
            table.at(level + 1, 2 * offset + 1) =
                here * (guess == 1 ? match_factor : miss_factor);
        }
    }
    return table;
}

StrategyRule hoeffding_rule(const Rational& q, const PredictionFunction& f) {
    require_open_unit(q, "hoeffding_rule");
    const Rational match_factor = 2 * q;
    const Rational miss_factor = 2 * (1 - q);
    return StrategyRule("hoeffding(q=" + format_rational(q) + ")",
                        [match_factor, miss_factor, f]() -> std::unique_ptr<RuleState> {
                            return std::make_unique<HoeffdingState>(match_factor, miss_factor,
                                                                    f);
                        });
}

RateEnclosure r_of_q(const Rational& q) {
    require_upper_half(q, "r_of_q");
    const Integer& numerator = q.get_num();
    const Integer& denominator = q.get_den();
    if (!denominator.fits_ulong_p() || denominator.get_ui() > 65536) {
        throw EnumerationTooLarge("r_of_q: denominator of q is too large to certify");
    }
    const unsigned long b = denominator.get_ui();
    const unsigned long a = numerator.get_ui();

    // Exact rational r^b = 2^b * a^a * (b-a)^{b-a} / b^b; every certified
    // comparison against r reduces to this value.
    Integer power_num = ipow2(b) * ipow(Integer(a), a) * ipow(Integer(b - a), b - a);
    Integer power_den = ipow(Integer(b), b);
    Rational base_power(power_num, power_den);
    base_power.canonicalize();

    RateEnclosure enclosure;
    enclosure.base_power = base_power;
    enclosure.base = b;

    // Find the largest dyadic m / 2^mant_bits that is at most r, comparing
    // (m / 2^mant_bits)^b against r^b exactly. Widen the mantissa until the
    // lower bound itself exceeds 1, which certifies r > 1.
    for (long mant_bits = 46; mant_bits <= 4096; mant_bits += 14) {
        const Integer floor_m = ipow2(static_cast<unsigned long>(mant_bits));
        Integer lo = floor_m;
        Integer hi = 2 * floor_m - 1;
        const Integer rhs = power_num * ipow2(static_cast<unsigned long>(mant_bits) * b);
        // Invariant: lo satisfies lo^b * den <= rhs (r >= 1 guarantees this
        // at lo = 2^mant_bits); hi + 1 does not (r < 2).
        while (lo < hi) {
            const Integer mid = (lo + hi + 1) / 2;
            if (ipow(mid, b) * power_den <= rhs) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        if (lo > floor_m) {
            enclosure.lower = DyadicBound{lo, -mant_bits};
            enclosure.upper = DyadicBound{lo + 1, -mant_bits};
            return enclosure;
        }
    }
    throw Error("r_of_q: failed to separate the growth rate from 1");
}

Rational r_power_exact(const Rational& q, unsigned long n) {
    require_upper_half(q, "r_power_exact");
    const Rational scaled = q * Rational(static_cast<unsigned long>(n));
    if (scaled.get_den() != 1) {
        throw PreconditionViolated("r_power_exact requires q * n to be an integer, got " +
                                   format_rational(scaled));
    }
    if (!scaled.get_num().fits_ulong_p()) {
        throw EnumerationTooLarge("r_power_exact: exponent q * n is too large");
    }
    const unsigned long matches = scaled.get_num().get_ui();
    return pow2(static_cast<long>(n)) * pow_rational(q, matches) *
           pow_rational(1 - q, n - matches);
}

TailCount hoeffding_tail_count(std::size_t n, const Rational& q, const PredictionFunction& f) {
    require_upper_half(q, "hoeffding_tail_count");
    if (n > 24) {
        throw EnumerationTooLarge("hoeffding_tail_count enumerates 2^n strings; n = " +
                                  std::to_string(n) + " exceeds 24");
    }

    // Census by depth-first walk carrying the number of correct guesses.
    // A leaf counts when matches > q * n, i.e. matches * den(q) > num(q) * n.
    const Integer threshold = q.get_num() * static_cast<unsigned long>(n);
    const Integer& den = q.get_den();
    Integer count = 0;
    BitString path;
    auto walk = [&](auto&& self, std::size_t matches) -> void {
        if (path.size() == n) {
            if (Integer(static_cast<unsigned long>(matches)) * den > threshold) {
                ++count;
            }
            return;
        }
        const int guess = f(path);
        for (int bit = 0; bit < 2; ++bit) {
            path.append(bit);
            self(self, matches + (bit == guess ? 1 : 0));
            path.pop_back();
        }
    };
    walk(walk, 0);

    // Exact bound check: count * r^n <= 2^n holds iff
    // count^b * num(r^b)^n <= 2^{n b} * den(r^b)^n, with b = den(q).
    TailCount result;
    result.count = count;
    if (count == 0) {
        result.bound_ok = true;
        return result;
    }
    const RateEnclosure rate = r_of_q(q);
    const unsigned long b = rate.base;
    const Integer lhs = ipow(count, b) * ipow(rate.base_power.get_num(), n);
    const Integer rhs =
        ipow2(static_cast<unsigned long>(n) * b) * ipow(rate.base_power.get_den(), n);
    result.bound_ok = (lhs <= rhs);
    return result;
}

MartingaleTable frequency_mixture(std::size_t depth, std::size_t truncation) {
    FrequencyMixtureParts parts = frequency_mixture_parts(depth, truncation);
    return mix({parts.zero_sided, parts.one_sided}, {Rational(1), Rational(1)});
}

FrequencyMixtureParts frequency_mixture_parts(std::size_t depth, std::size_t truncation) {
    if (truncation < 1) {
        throw TruncationInvalid("frequency_mixture requires truncation >= 1");
    }
    const PredictionFunction zero_guess = PredictionFunction::constant(0);
    std::vector<MartingaleTable> upper_parts;
    std::vector<MartingaleTable> lower_parts;
    std::vector<Rational> weights;
    for (std::size_t i = 1; i <= truncation; ++i) {
        const Rational offset = pow2(-static_cast<long>(i) - 1);
        upper_parts.push_back(hoeffding(Rational(1, 2) + offset, zero_guess, depth));
        lower_parts.push_back(hoeffding(Rational(1, 2) - offset, zero_guess, depth));
        weights.push_back(pow2(-static_cast<long>(i)));
    }
    return FrequencyMixtureParts{mix(upper_parts, weights), mix(lower_parts, weights)};
}

StrategyRule frequency_mixture_rule(std::size_t truncation) {
    if (truncation < 1) {
        throw TruncationInvalid("frequency_mixture_rule requires truncation >= 1");
    }
    return StrategyRule("frequency-mixture(truncation=" + std::to_string(truncation) + ")",
                        [truncation]() -> std::unique_ptr<RuleState> {
                            return std::make_unique<FrequencyMixtureState>(truncation);
                        });
}

Rational frequency_mixture_tail_bound(std::size_t depth, std::size_t truncation) {
    if (truncation < 1) {
        throw TruncationInvalid("frequency_mixture_tail_bound requires truncation >= 1");
    }
    return pow2(static_cast<long>(depth) - static_cast<long>(truncation) + 1);
}

}  // namespace betkit
