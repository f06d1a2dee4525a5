#pragma once

// Shared fixtures, generators, and independent oracles for the test suite.
// Everything here is deterministic: each test seeds its own SplitMix64, so
// failures reproduce bit for bit. Oracles are written straight from the
// documented definitions and avoid the library's search and pruning paths.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/rational.hpp"
#include "betkit/rng.hpp"
#include "betkit/stage_sequence.hpp"

namespace betkit::testing {

// ---------------------------------------------------------------------------
// Table builders
// ---------------------------------------------------------------------------

// Builds a table from explicit "bits -> p/q" entries, one per node.
inline MartingaleTable make_table(
    std::size_t depth, const std::vector<std::pair<std::string, std::string>>& entries) {
    MartingaleTable table(depth);
    for (const auto& [bits, value] : entries) {
        table.at(BitString::parse(bits)) = parse_rational(value);
    }
    return table;
}

// The worked depth-2 example reused across decomposition and wager tests:
// bets 1/2 on outcome 0 at the root, 1/2 on outcome 1 at "0", nothing at "1".
inline MartingaleTable example_table() {
    return make_table(2, {{"", "1"},
                          {"0", "3/2"},
                          {"1", "1/2"},
                          {"00", "1"},
                          {"01", "2"},
                          {"10", "1/2"},
                          {"11", "1/2"}});
}

// Random valid table with the given root: every node splits its doubled
// value between the children in sixteenths, so zeros and all-in bets occur.
inline MartingaleTable random_table(SplitMix64& rng, std::size_t depth, const Rational& root) {
    MartingaleTable table(depth);
    table.at(0, 0) = root;
    for (std::size_t level = 0; level < depth; ++level) {
        for (std::size_t offset = 0; offset < (std::size_t{1} << level); ++offset) {
            const Rational& value = table.at(level, offset);
            const unsigned long k = rng.next_below(17);
            table.at(level + 1, 2 * offset) = Rational(value * k) / 8;
            table.at(level + 1, 2 * offset + 1) = Rational(value * (16 - k)) / 8;
        }
    }
    return table;
}

// Random increment that follows f at every node: the favored child receives
// at least the parent's value. `strict` forces a strict bet at every node.
inline MartingaleTable random_sided_increment(SplitMix64& rng, std::size_t depth,
                                              const PredictionFunction& f,
                                              const Rational& root, bool strict = false) {
    MartingaleTable table(depth);
    table.at(0, 0) = root;
    for (std::size_t level = 0; level < depth; ++level) {
        for (std::size_t offset = 0; offset < (std::size_t{1} << level); ++offset) {
            const Rational& value = table.at(level, offset);
            // Strict increments keep both children positive (k <= 7), since a
            // zeroed subtree cannot bet strictly below it.
            const unsigned long k = (strict ? 1 : 0) + rng.next_below(strict ? 7 : 9);
            const Rational toward = Rational(value * (8 + k)) / 8;
            const Rational away = Rational(value * (8 - k)) / 8;
            const int favored = f(BitString::from_level_offset(level, offset));
            table.at(level + 1, 2 * offset + static_cast<std::size_t>(favored)) = toward;
            table.at(level + 1, 2 * offset + static_cast<std::size_t>(1 - favored)) = away;
        }
    }
    return table;
}

// Random next-bit predictor backed by a dense table of the given depth.
inline PredictionFunction random_prediction(SplitMix64& rng, std::size_t depth) {
    std::vector<std::vector<std::uint8_t>> levels(depth);
    for (std::size_t level = 0; level < depth; ++level) {
        levels[level].resize(std::size_t{1} << level);
        for (std::uint8_t& bit : levels[level]) {
            bit = static_cast<std::uint8_t>(rng.next_below(2));
        }
    }
    return PredictionFunction::from_table(std::move(levels));
}

// Opponent scripted as `count` 0-sided plus `count` 1-sided increments whose
// combined final root is exactly `total_root`.
inline SeparableOpponent random_separable_opponent(SplitMix64& rng, std::size_t depth,
                                                   std::size_t count,
                                                   const Rational& total_root) {
    const Rational share = total_root / Rational(2 * static_cast<unsigned long>(count));
    SeparableOpponent opponent;
    for (std::size_t k = 0; k < count; ++k) {
        opponent.zero_increments.push_back(
            random_sided_increment(rng, depth, PredictionFunction::constant(0), share));
        opponent.one_increments.push_back(
            random_sided_increment(rng, depth, PredictionFunction::constant(1), share));
    }
    return opponent;
}

// All-in chain: doubles along `spine` (all capital on the next spine bit),
// stays constant on every extension of the spine, zero elsewhere. The result
// is a valid table, and 0-sided whenever the spine contains no 1s.
inline MartingaleTable all_in_chain(std::size_t depth, const BitString& spine,
                                    const Rational& root) {
    MartingaleTable table(depth);
    table.at(0, 0) = root;
    for (std::size_t level = 0; level < depth; ++level) {
        for (std::size_t offset = 0; offset < (std::size_t{1} << level); ++offset) {
            const BitString node = BitString::from_level_offset(level, offset);
            const Rational& value = table.at(level, offset);
            if (level < spine.size() && node.is_prefix_of(spine)) {
                const int next = spine.bit(level);
                table.at(level + 1, 2 * offset + static_cast<std::size_t>(next)) = value * 2;
            } else {
                table.at(level + 1, 2 * offset) = value;
                table.at(level + 1, 2 * offset + 1) = value;
            }
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Node-set generators
// ---------------------------------------------------------------------------

inline std::vector<BitString> full_level(std::size_t length) {
    std::vector<BitString> nodes;
    nodes.reserve(std::size_t{1} << length);
    for (std::size_t offset = 0; offset < (std::size_t{1} << length); ++offset) {
        nodes.push_back(BitString::from_level_offset(length, offset));
    }
    return nodes;
}

// Random antichain within the depth, not necessarily covering: each visited
// node is claimed, dropped with its whole subtree, or split into children.
inline std::vector<BitString> random_prefix_free(SplitMix64& rng, std::size_t depth) {
    std::vector<BitString> result;
    std::vector<BitString> pending{BitString()};
    while (!pending.empty()) {
        BitString node = pending.back();
        pending.pop_back();
        if (node.size() == depth) {
            if (rng.next_below(2) == 0) {
                result.push_back(node);
            }
            continue;
        }
        switch (rng.next_below(4)) {
            case 0:
                result.push_back(node);
                break;
            case 1:
                break;
            default:
                pending.push_back(node.child(0));
                pending.push_back(node.child(1));
        }
    }
    return result;
}

// Random antichain that covers the whole space: every path from the root
// hits exactly one member, so level weights sum to 1.
inline std::vector<BitString> random_full_antichain(SplitMix64& rng, std::size_t depth) {
    std::vector<BitString> result;
    std::vector<BitString> pending{BitString()};
    while (!pending.empty()) {
        BitString node = pending.back();
        pending.pop_back();
        if (node.size() == depth || rng.next_below(3) == 0) {
            result.push_back(node);
        } else {
            pending.push_back(node.child(0));
            pending.push_back(node.child(1));
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Special-extension oracles
// ---------------------------------------------------------------------------

// Transliteration of the documented predicate, independent of the library's
// implementation: the capital chain and symbol counts are recomputed here
// from raw table lookups.
inline bool special_by_definition(const BitString& base, const BitString& candidate,
                                  const Rational& eps, const MartingaleTable& stage) {
    if (!base.is_prefix_of(candidate)) {
        return false;
    }
    Rational chain_max = stage.at(BitString());
    for (std::size_t length = 1; length <= base.size(); ++length) {
        chain_max = std::max<Rational>(chain_max, stage.at(candidate.prefix(length)));
    }
    const Rational cap = chain_max / (Rational(1) - eps);
    for (std::size_t length = base.size(); length <= candidate.size(); ++length) {
        chain_max = std::max<Rational>(chain_max, stage.at(candidate.prefix(length)));
        if (chain_max > cap) {
            return false;
        }
    }
    const std::size_t gap = candidate.size() - base.size();
    if (gap == 0) {
        return true;
    }
    std::size_t zeros = 0;
    for (std::size_t i = base.size(); i < candidate.size(); ++i) {
        zeros += candidate.bit(i) == 0 ? 1 : 0;
    }
    const Rational limit = (Rational(1) + eps) / 2 * Rational(static_cast<unsigned long>(gap));
    return Rational(static_cast<unsigned long>(zeros)) < limit &&
           Rational(static_cast<unsigned long>(gap - zeros)) < limit;
}

// Exhaustive leftmost special extension: visits every candidate leaf in
// lexicographic order carrying the window state, no pruning.
inline std::optional<BitString> brute_leftmost_special(const BitString& base,
                                                       std::size_t target_length,
                                                       const Rational& eps,
                                                       const MartingaleTable& stage) {
    const Rational bound = running_max(stage, base) / (Rational(1) - eps);
    const std::size_t gap = target_length - base.size();
    const Rational limit = (Rational(1) + eps) / 2 * Rational(static_cast<unsigned long>(gap));
    std::optional<BitString> best;
    BitString node = base;
    auto walk = [&](auto&& self, bool capital_ok, std::size_t zeros) -> void {
        if (best.has_value()) {
            return;
        }
        if (node.size() == target_length) {
            if (gap == 0) {
                if (capital_ok) {
                    best = node;
                }
                return;
            }
            const std::size_t ones = gap - zeros;
            if (capital_ok && Rational(static_cast<unsigned long>(zeros)) < limit &&
                Rational(static_cast<unsigned long>(ones)) < limit) {
                best = node;
            }
            return;
        }
        for (int bit = 0; bit <= 1 && !best.has_value(); ++bit) {
            node.append(bit);
            const bool still_ok = capital_ok && !(stage.at(node) > bound);
            self(self, still_ok, zeros + (bit == 0 ? 1 : 0));
            node.pop_back();
        }
    };
    walk(walk, true, 0);
    return best;
}

// Multi-opponent counterpart of the definitional predicate: every opponent's
// capital must stay within its own bound and its correct-prediction count in
// the window must lie strictly inside ((1-delta)*gap, delta*gap).
inline bool special_multi_by_definition(
    const BitString& base, const BitString& candidate, const Rational& eps,
    const std::vector<std::pair<MartingaleTable, PredictionFunction>>& opponents) {
    if (!base.is_prefix_of(candidate)) {
        return false;
    }
    const std::size_t gap = candidate.size() - base.size();
    const Rational delta = (Rational(1) + eps) / 2;
    const Rational gap_rational(static_cast<unsigned long>(gap));
    for (const auto& [stage, f] : opponents) {
        const Rational cap = running_max(stage, base) / (Rational(1) - eps);
        for (std::size_t length = base.size(); length <= candidate.size(); ++length) {
            if (running_max(stage, candidate.prefix(length)) > cap) {
                return false;
            }
        }
        if (gap == 0) {
            continue;
        }
        std::size_t correct = 0;
        for (std::size_t i = base.size(); i < candidate.size(); ++i) {
            correct += f(candidate.prefix(i)) == candidate.bit(i) ? 1 : 0;
        }
        const Rational count(static_cast<unsigned long>(correct));
        if (!(count > (Rational(1) - delta) * gap_rational && count < delta * gap_rational)) {
            return false;
        }
    }
    return true;
}

// Exhaustive leftmost multi-window extension via the definitional predicate.
inline std::optional<BitString> brute_leftmost_special_multi(
    const BitString& base, std::size_t target_length, const Rational& eps,
    const std::vector<std::pair<MartingaleTable, PredictionFunction>>& opponents) {
    const std::size_t gap = target_length - base.size();
    for (std::size_t offset = 0; offset < (std::size_t{1} << gap); ++offset) {
        const BitString window = BitString::from_level_offset(gap, offset);
        BitString candidate = base;
        for (std::size_t i = 0; i < window.size(); ++i) {
            candidate.append(window.bit(i));
        }
        if (special_multi_by_definition(base, candidate, eps, opponents)) {
            return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace betkit::testing
