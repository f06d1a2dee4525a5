#include "betkit/special_extension.hpp"

#include <string>

#include "betkit/dyadic.hpp"
#include "betkit/errors.hpp"
#include "betkit/hoeffding.hpp"

namespace betkit {

namespace {

void require_eps(const Rational& eps, const char* where) {
    if (!(eps > 0 && eps < 1)) {
        throw EpsOutOfRange(std::string(where) + " requires eps in (0,1), got " +
                            format_rational(eps));
    }
}

struct OpponentView {
    const MartingaleTable* table = nullptr;
    const PredictionFunction* f = nullptr;
    Rational capital_bound;  // running_max(base) / (1 - eps)
};

// Shared depth-first search for the leftmost admissible window. Every prune
// is sound (the pruned condition can never recover as the window grows), so
// the first full-length hit is the lexicographic minimum.
std::optional<BitString> search_window(const BitString& base, std::size_t target_length,
                                       const Rational& eps,
                                       const std::vector<OpponentView>& opponents) {
    const std::size_t gap = target_length - base.size();
    if (gap > 24) {
        throw EnumerationTooLarge("special-extension window of " + std::to_string(gap) +
                                  " bits exceeds the enumeration guard of 24");
    }
    if (gap == 0) {
        return base;
    }

    const Rational delta = (1 + eps) / 2;
    // Correct-prediction counts must end strictly inside
    // ((1 - delta) * gap, delta * gap).
    const Rational upper_count = delta * static_cast<unsigned long>(gap);
    const Rational lower_count = (1 - delta) * static_cast<unsigned long>(gap);

    BitString path = base;
    std::vector<std::size_t> matches(opponents.size(), 0);

    auto admissible_child = [&]() -> bool {
        // Called with `path` already extended by the new bit and `matches`
        // updated to count it.
        const std::size_t steps = path.size() - base.size();
        const std::size_t remaining = gap - steps;
        for (std::size_t j = 0; j < opponents.size(); ++j) {
            if (opponents[j].table->at(path) > opponents[j].capital_bound) {
                return false;
            }
            // The final match count can only land inside the window if it is
            // still below the upper edge and can still clear the lower edge.
            if (!(Rational(static_cast<unsigned long>(matches[j])) < upper_count)) {
                return false;
            }
            if (!(Rational(static_cast<unsigned long>(matches[j] + remaining)) >
                  lower_count)) {
                return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> std::optional<BitString> {
        if (path.size() == target_length) {
            return path;
        }
        std::vector<int> guesses(opponents.size());
        for (std::size_t j = 0; j < opponents.size(); ++j) {
            guesses[j] = (*opponents[j].f)(path);
        }
        for (int bit = 0; bit < 2; ++bit) {
            path.append(bit);
            for (std::size_t j = 0; j < opponents.size(); ++j) {
                if (guesses[j] == bit) {
                    ++matches[j];
                }
            }
            if (admissible_child()) {
                std::optional<BitString> found = self(self);
                if (found.has_value()) {
                    return found;
                }
            }
            for (std::size_t j = 0; j < opponents.size(); ++j) {
                if (guesses[j] == bit) {
                    --matches[j];
                }
            }
            path.pop_back();
        }
        return std::nullopt;
    };
    return dfs(dfs);
}

void check_window_lengths(const BitString& base, std::size_t target_length,
                          std::size_t depth) {
    if (target_length < base.size()) {
        throw PreconditionViolated("target length " + std::to_string(target_length) +
                                   " is shorter than the base prefix (" +
                                   std::to_string(base.size()) + ")");
    }
    if (target_length > depth) {
        throw DepthExceeded("target length " + std::to_string(target_length) +
                            " exceeds the stage depth " + std::to_string(depth));
    }
}

}  // namespace

bool is_special_extension(const BitString& base, const BitString& candidate,
                          const Rational& eps, const MartingaleTable& stage) {
    require_eps(eps, "is_special_extension");
    if (!base.is_prefix_of(candidate)) {
        throw NotAnExtension("\"" + candidate.str() + "\" does not extend \"" + base.str() +
                             "\"");
    }
    if (candidate.size() > stage.depth()) {
        throw DepthExceeded("candidate is deeper than the stage table");
    }
    const std::size_t gap = candidate.size() - base.size();
    if (gap == 0) {
        return true;
    }

    const Rational bound = running_max(stage, base) / (1 - eps);
    const Rational count_cap = (1 + eps) / 2 * static_cast<unsigned long>(gap);
    std::size_t zeros = 0;
    for (std::size_t length = base.size() + 1; length <= candidate.size(); ++length) {
        if (stage.at(candidate.prefix(length)) > bound) {
            return false;
        }
        if (candidate.bit(length - 1) == 0) {
            ++zeros;
        }
    }
    const std::size_t ones = gap - zeros;
    return Rational(static_cast<unsigned long>(zeros)) < count_cap &&
           Rational(static_cast<unsigned long>(ones)) < count_cap;
}

std::optional<BitString> find_special_extension(const BitString& base,
                                                std::size_t target_length,
                                                const Rational& eps,
                                                const MartingaleTable& stage) {
    require_eps(eps, "find_special_extension");
    check_window_lengths(base, target_length, stage.depth());

    // The single-table search is the one-opponent window with the constant-0
    // prediction: correct predictions are the zeros, and the two-sided count
    // window is exactly "both symbol counts strictly below delta * gap".
    const PredictionFunction zero_guess = PredictionFunction::constant(0);
    std::vector<OpponentView> views(1);
    views[0].table = &stage;
    views[0].f = &zero_guess;
    views[0].capital_bound = running_max(stage, base) / (1 - eps);
    return search_window(base, target_length, eps, views);
}

std::optional<BitString> find_special_extension_multi(
    const BitString& base, std::size_t target_length, const Rational& eps,
    const std::vector<std::pair<MartingaleTable, PredictionFunction>>& opponents) {
    require_eps(eps, "find_special_extension_multi");
    if (opponents.empty()) {
        throw PreconditionViolated("find_special_extension_multi requires opponents");
    }
    std::size_t depth = opponents.front().first.depth();
    for (const auto& [table, f] : opponents) {
        depth = std::min(depth, table.depth());
        if (table.root() > 1) {
            throw PreconditionViolated("opponent root capital " +
                                       format_rational(table.root()) + " exceeds 1");
        }
    }
    check_window_lengths(base, target_length, depth);

    std::vector<OpponentView> views(opponents.size());
    for (std::size_t j = 0; j < opponents.size(); ++j) {
        views[j].table = &opponents[j].first;
        views[j].f = &opponents[j].second;
        views[j].capital_bound = running_max(opponents[j].first, base) / (1 - eps);
    }
    return search_window(base, target_length, eps, views);
}

namespace {

// Certified test of r^l >= target_root, phrased on the exact rational power
// R = r^b (b = denominator of the bias): decides R^l >= target_root^b with
// directed dyadic bounds, escalating precision until the bounds separate and
// falling back to the exact rational power for small l.
bool rate_power_reaches(const RateEnclosure& rate, unsigned long l, const Rational& target,
                        unsigned long base) {
    Rational target_power = pow_rational(target, base);
    for (unsigned precision = 128; precision <= (1u << 20); precision *= 2) {
        const DyadicBound low =
            pow(from_rational(rate.base_power, precision, Rounding::Down), l, precision,
                Rounding::Down);
        if (compare(low, target_power) >= 0) {
            return true;
        }
        const DyadicBound high =
            pow(from_rational(rate.base_power, precision, Rounding::Up), l, precision,
                Rounding::Up);
        if (compare(high, target_power) < 0) {
            return false;
        }
    }
    const std::size_t base_bits =
        mpz_sizeinbase(rate.base_power.get_num().get_mpz_t(), 2) +
        mpz_sizeinbase(rate.base_power.get_den().get_mpz_t(), 2);
    if (l > (std::size_t{1} << 26) / (base_bits + 1)) {
        throw EnumerationTooLarge("gap-bound certificate does not separate");
    }
    return pow_rational(rate.base_power, l) >= target_power;
}

}  // namespace

unsigned long special_gap_bound_multi(const Rational& eps, std::size_t opponents) {
    require_eps(eps, "special_gap_bound");
    if (opponents < 1) {
        throw PreconditionViolated("special_gap_bound_multi requires opponents >= 1");
    }
    const Rational bias = (1 + eps) / 2;
    const RateEnclosure rate = r_of_q(bias);
    const Rational target = 2 * Rational(static_cast<unsigned long>(opponents)) / eps;

    auto reaches = [&](unsigned long l) {
        return rate_power_reaches(rate, l, target, rate.base);
    };

    unsigned long high = 1;
    while (!reaches(high)) {
        if (high > (1ul << 40)) {
            throw EnumerationTooLarge("gap bound exceeds 2^40");
        }
        high *= 2;
    }
    unsigned long low = high / 2 + 1;
    if (high == 1) {
        return 1;
    }
    // Invariant: reaches(high), not reaches(low - 1).
    while (low < high) {
        const unsigned long mid = low + (high - low) / 2;
        if (reaches(mid)) {
            high = mid;
        } else {
            low = mid + 1;
        }
    }
    return low;
}

unsigned long special_gap_bound(const Rational& eps) {
    return special_gap_bound_multi(eps, 1);
}

}  // namespace betkit
