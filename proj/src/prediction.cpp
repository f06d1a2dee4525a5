#include "betkit/prediction.hpp"

#include "betkit/errors.hpp"

namespace betkit {

PredictionFunction PredictionFunction::constant(int bit) {
    PredictionFunction f;
    f.kind_ = Kind::Constant;
    f.constant_bit_ = bit ? 1 : 0;
    return f;
}

PredictionFunction PredictionFunction::from_table(
    std::vector<std::vector<std::uint8_t>> levels) {
    for (std::size_t n = 0; n < levels.size(); ++n) {
        if (levels[n].size() != (std::size_t{1} << n)) {
            throw MissingEntry("prediction table level " + std::to_string(n) +
                               " must hold 2^" + std::to_string(n) + " guesses");
        }
    }
    PredictionFunction f;
    f.kind_ = Kind::Table;
    f.levels_ = std::make_shared<const std::vector<std::vector<std::uint8_t>>>(
        std::move(levels));
    return f;
}

PredictionFunction PredictionFunction::from_callable(
    std::function<int(const BitString&)> fn) {
    PredictionFunction f;
    f.kind_ = Kind::Callable;
    f.callable_ = std::move(fn);
    return f;
}

int PredictionFunction::operator()(const BitString& prefix) const {
    switch (kind_) {
        case Kind::Constant:
            return constant_bit_;
        case Kind::Table: {
            if (prefix.size() >= levels_->size()) {
                throw DepthExceeded("prediction table has no entry at depth " +
                                    std::to_string(prefix.size()));
            }
            return (*levels_)[prefix.size()][prefix.level_offset()] ? 1 : 0;
        }
        case Kind::Callable:
            return callable_(prefix) ? 1 : 0;
    }
    return 0;
}

std::optional<std::size_t> PredictionFunction::depth() const {
    if (kind_ == Kind::Table) {
        return levels_->size();
    }
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> guess_counts(const PredictionFunction& f,
                                                 const BitString& x) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (f(x.prefix(i)) == x.bit(i)) ++correct;
    }
    return {correct, x.size() - correct};
}

}  // namespace betkit
