#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "betkit/bitstring.hpp"

namespace betkit {

// A next-bit predictor: maps a finite prefix to a guessed next bit. Three
// shapes cover everything the strategies need: a constant guess, a dense
// per-node table up to some depth, and an arbitrary callable for rules that
// outlive any finite table.
class PredictionFunction {
public:
    // Defaults to the constant-0 predictor via the member initializers.
    PredictionFunction() = default;

    static PredictionFunction constant(int bit);

    // levels[n] holds 2^n guesses, one per string of length n in level-offset
    // order. Predictions are defined for prefixes shorter than levels.size().
    static PredictionFunction from_table(std::vector<std::vector<std::uint8_t>> levels);

    static PredictionFunction from_callable(std::function<int(const BitString&)> fn);

    // Guessed next bit after `prefix`. Throws DepthExceeded when a table-backed
    // predictor is asked beyond its depth.
    int operator()(const BitString& prefix) const;

    // Number of levels a table-backed predictor covers; nullopt when the
    // predictor answers at every prefix.
    std::optional<std::size_t> depth() const;

    bool is_constant() const { return kind_ == Kind::Constant; }
    int constant_bit() const { return constant_bit_; }
    bool is_table() const { return kind_ == Kind::Table; }
    const std::vector<std::vector<std::uint8_t>>& table_levels() const { return *levels_; }

private:
    enum class Kind { Constant, Table, Callable };

    Kind kind_ = Kind::Constant;
    int constant_bit_ = 0;
    std::shared_ptr<const std::vector<std::vector<std::uint8_t>>> levels_;
    std::function<int(const BitString&)> callable_;
};

// Counts of correct and incorrect guesses of f along x: the first component
// counts positions i with f(x restricted to i) == x(i), the second the rest.
std::pair<std::size_t, std::size_t> guess_counts(const PredictionFunction& f,
                                                 const BitString& x);

}  // namespace betkit
